// Prints a few closed diagram values and the Hopf link.
#include <iostream>

#include "f4skein/evaluate.hpp"

int main() {
    using namespace f4skein;
    std::cout << "circle:  " << reduce_closed(parse_expr("cup ; cap")) << "\n";
    std::cout << "theta:   " << reduce_closed(parse_expr("cup ; split * id(1) ; merge * id(1) ; cap")) << "\n";
    ScalarQ hopf = link_invariant({2});
    std::cout << "hopf:    " << hopf << "\n";
    std::cout << "at q=1:  " << hopf.specialize(1) << "\n";
    for (const auto& e : idempotents())
        std::cout << "e_" << e.name << " trace " << closure(e.e) << "\n";
}
