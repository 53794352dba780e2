// Sums the slice-volume series term by term and compares against its digamma
// closed form.
#include <cstdio>

#include "cyvol/cyvol.hpp"

using namespace cyvol;

int main() {
    const Rational a(-1), b(2), k(1);
    std::printf("V(a,b,k) at a=-1, b=2, k=1\n");
    for (long long n : {100LL, 10000LL, 1000000LL}) {
        const SeriesResult part = series_partial_sum(n, a, b, k);
        std::printf("  N=%-8lld partial %.15f  (tail bound %.2e)\n", n, part.partial_sum,
                    part.tail_bound);
    }
    const SeriesResult closed = v_closed_form(a, b, k);
    std::printf("  closed     %.15f  via psi at {%.6f, %.6f, %.6f, %.6f}\n", closed.closed_form,
                closed.digamma_args[0], closed.digamma_args[1], closed.digamma_args[2],
                closed.digamma_args[3]);

    const Rational exact = series_summand(1, a, b, k);
    std::printf("first term exactly %s\n", to_string(exact).c_str());
    return 0;
}
