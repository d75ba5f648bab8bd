// A short tour: reduce a word to its primitive generator, inspect defects,
// and watch the k-bonacci family collapse onto gamma_k.

#include <iostream>

#include "wordwalk/wordwalk.hpp"

int main() {
    using namespace wordwalk;

    Word w = parse_word("abcbcbd", WordFormat::chars);
    GeneratorCertificate cert = primitive_generator(w);
    std::cout << "word:        " << print_word(w, WordFormat::chars) << "\n";
    std::cout << "generator:   " << print_word(cert.generator, WordFormat::chars) << "\n";
    std::cout << "witness:     " << print_course(cert.walk) << "\n";
    std::cout << "replayed:    "
              << print_word(apply(cert.oriented_generator(), cert.walk), WordFormat::chars)
              << "\n\n";

    Word u = cert.generator;
    std::cout << "defects of " << print_word(u, WordFormat::chars) << ":";
    for (auto [i, j] : defects(u).pairs) std::cout << " (" << i << "," << j << ")";
    std::cout << "\n\n";

    for (int k = 2; k <= 4; ++k) {
        std::cout << "gamma_" << k << " = " << print_word(gamma(k), WordFormat::chars)
                  << "  generates:";
        for (int n = k; n <= k + 3; ++n)
            std::cout << " alpha(" << k << "," << n << ")=" << (verify_theorem4(k, n) ? "yes" : "NO");
        std::cout << "\n";
    }
    return 0;
}
