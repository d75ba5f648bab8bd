// Render the eight-letter worked example as an SVG diagram.

#include <fstream>
#include <iostream>

#include "wordwalk/format.hpp"
#include "wordwalk/svg.hpp"

int main() {
    using namespace wordwalk;
    Word u = parse_word("cbadefgh", WordFormat::chars);
    Walk f({3, 2, 1, 2, 3, 3, 3, 4, 5, 6, 5, 4, 3, 4, 5, 6, 7, 8, 7, 6}, 8);

    std::cout << "u   = cbadefgh\n";
    std::cout << "u^f = " << print_word(apply(u, f), WordFormat::chars) << "\n";

    std::ofstream out("walk_example.svg", std::ios::binary);
    out << render_walk_svg(u, f);
    std::cout << "wrote walk_example.svg\n";
    return 0;
}
