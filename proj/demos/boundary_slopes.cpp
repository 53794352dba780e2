// Measures how the volume function vanishes toward three boundary points of
// the effective cone: the expanding eigendirection, a chamber face, and the
// flat face spanned by both.
#include <cstdio>

#include "cyvol/cyvol.hpp"

using namespace cyvol;

namespace {

void show(const char* label, const AsymptoticReport& r) {
    std::printf("%-14s slope %.4f  class %s (k=%d, predicted %.1f), residual %.3f\n", label,
                r.slope, r.predicted_class.c_str(), r.predicted_k, r.predicted_exponent,
                r.residual);
}

}  // namespace

int main() {
    const AmbientSpace space({3, 3, 3}, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    const std::vector<QuadExt> ones(3, QuadExt(1));

    const auto eigen = coxeter_pair_eigen_exact(space, 0, 1);
    std::printf("lambda = %s + %s sqrt%s\n", to_string(eigen.lambda.rational_part()).c_str(),
                to_string(eigen.lambda.radical_part()).c_str(),
                to_string(eigen.lambda.radicand()).c_str());

    show("v_lambda", vol_asymptotic_exponent<QuadExt>(space, eigen.vec, ones));
    show("h3", vol_asymptotic_exponent<Rational>(space, {0, 0, 1}, {1, 1, 1}));
    const auto mixed = boundary_lambda_exact(space, 0, 1, Rational(1), {Rational(1)});
    show("v_lambda+h3", vol_asymptotic_exponent<QuadExt>(space, mixed, ones));
    return 0;
}
