// Walks a divisor class out of the nef chamber with explicit reflections and
// brings it back with the greedy reduction, printing each step.
#include <iostream>

#include "cyvol/cyvol.hpp"

using namespace cyvol;

namespace {

void print_class(const char* label, const std::vector<Rational>& v) {
    std::cout << label << " = (";
    for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
    std::cout << ")\n";
}

}  // namespace

int main() {
    const AmbientSpace space({3, 3, 3}, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    std::cout << "triple (1,1,2)-divisor Calabi-Yau in (P^3)^3, dim " << space.dim() << "\n";

    const GramMatrix b = gram_from_ambient(space);
    std::cout << "Lorentzian pairing: " << (is_lorentzian(b) ? "yes" : "no") << "\n";

    std::vector<Rational> v{1, 2, 3};
    print_class("start", v);
    const Word walk{0, 1, 0};
    auto moved = apply_word(space, walk, v);
    print_class("after iota_1 iota_2 iota_1", moved);
    std::cout << "vol is invariant: vol(start) = " << vol(space, v)
              << ", vol(moved) = " << vol(space, moved) << "\n";

    const auto red = reduce_to_nef(space, moved);
    print_class("reduced", red.reduced);
    std::cout << "recovered in " << red.iterations << " reflections, word =";
    for (int letter : red.word) std::cout << " " << letter + 1;
    std::cout << "\n";
    return 0;
}
