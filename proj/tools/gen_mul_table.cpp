// Writes the two-strand multiplication table derived by the rewriter.
#include <fstream>
#include <iostream>

#include "f4skein/twopoint.hpp"

int main(int argc, char** argv) {
    using namespace f4skein;
    MulTable m = derive_mul_table();
    std::ofstream file;
    if (argc > 1)
        file.open(argv[1]);
    std::ostream& out = argc > 1 ? static_cast<std::ostream&>(file) : std::cout;
    out << "// Generated by gen_mul_table. Entry [i][j][k]: coefficient of basis k in b_i after b_j,\n"
           "// basis order jail, hourglass, H, I, X.\n"
           "inline constexpr const char* kFrozenMulTable[5][5][5] = {\n";
    for (int i = 0; i < kTwoDim; ++i) {
        out << "    {\n";
        for (int j = 0; j < kTwoDim; ++j) {
            out << "        {";
            for (int k = 0; k < kTwoDim; ++k)
                out << (k ? ", " : "") << '"' << m[i][j][k].to_string() << '"';
            out << "},\n";
        }
        out << "    },\n";
    }
    out << "};\n";
    return 0;
}
