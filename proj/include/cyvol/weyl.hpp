#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cyvol/ambient.hpp"
#include "cyvol/error.hpp"
#include "cyvol/linalg.hpp"
#include "cyvol/lorentz.hpp"
#include "cyvol/scalar.hpp"

namespace cyvol {

// A word in the generating involutions, letters = 0-based factor indices in J.
using Word = std::vector<int>;

inline bool is_reduced(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

inline void require_in_j(const AmbientSpace& space, int j) {
    const auto J = j_set(space);
    require(std::find(J.begin(), J.end(), j) != J.end(), "NotInJ",
            "index is not a minimal factor", {{"index", std::to_string(j + 1)}});
}

inline void require_full_j(const AmbientSpace& space) {
    require(static_cast<int>(j_set(space).size()) == space.l(), "NotFullJ",
            "operation needs every factor dimension minimal",
            {{"j_size", std::to_string(j_set(space).size())},
             {"l", std::to_string(space.l())}});
}

// Column j of the generator matrix: entry i is b_ij for i != j and -1 at j.
inline std::vector<Int> involution_column(const AmbientSpace& space, int j) {
    require_in_j(space, j);
    std::vector<Int> col(space.l());
    for (int i = 0; i < space.l(); ++i)
        col[i] = (i == j) ? Int(-1) : b_coefficient(space, i, j);
    return col;
}

// Matrix of the involution: identity except column j.
inline Matrix<Rational> involution_matrix(const AmbientSpace& space, int j) {
    const auto col = involution_column(space, j);
    Matrix<Rational> m = Matrix<Rational>::identity(space.l());
    for (int i = 0; i < space.l(); ++i) m(i, j) = Rational(col[i]);
    return m;
}

template <class T>
std::vector<T> apply_involution(const AmbientSpace& space, int j, std::vector<T> v) {
    require(static_cast<int>(v.size()) == space.l(), "ShapeMismatch",
            "class has wrong dimension");
    const auto col = involution_column(space, j);
    const T vj = v[j];
    for (int i = 0; i < space.l(); ++i) {
        if (i == j) v[i] = -vj;
        else v[i] += ScalarTraits<T>::from_rational(Rational(col[i])) * vj;
    }
    return v;
}

// Letters act as matrices multiplied left to right, so the rightmost letter
// hits v first.
template <class T>
std::vector<T> apply_word(const AmbientSpace& space, const Word& w, std::vector<T> v) {
    require(is_reduced(w), "UnreducedWord", "word has equal adjacent letters");
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        v = apply_involution(space, *it, std::move(v));
    return v;
}

template <class T>
struct ReduceResult {
    Word word;               // apply_word(word, input) == reduced
    std::vector<T> reduced;  // all coordinates >= 0
    int iterations = 0;
};

// Deterministic chamber descent: while some coordinate is negative, reflect in
// the smallest such index. Negative coordinates outside J cannot be repaired
// by any generator; divergent directions exhaust the iteration cap.
template <class T>
ReduceResult<T> reduce_to_nef(const AmbientSpace& space, std::vector<T> v,
                              int max_iter = 10000) {
    require(static_cast<int>(v.size()) == space.l(), "ShapeMismatch",
            "class has wrong dimension");
    const auto J = j_set(space);
    ReduceResult<T> out;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < space.l(); ++i) {
            require(ScalarTraits<T>::is_finite(v[i]), "IterationLimit",
                    "coordinates overflowed; direction does not reduce",
                    {{"iterations", std::to_string(out.iterations)}});
            if (ScalarTraits<T>::is_negative(v[i])) { neg = i; break; }
        }
        if (neg < 0) break;
        require(std::find(J.begin(), J.end(), neg) != J.end(), "NonJNegative",
                "negative coordinate outside the minimal-factor set",
                {{"coordinate", std::to_string(neg + 1)}});
        require(out.iterations < max_iter, "IterationLimit",
                "reduction did not reach the nef cone",
                {{"max_iter", std::to_string(max_iter)}});
        v = apply_involution(space, neg, std::move(v));
        out.word.push_back(neg);
        ++out.iterations;
    }
    std::reverse(out.word.begin(), out.word.end());
    out.reduced = std::move(v);
    return out;
}

// Three-part test against the dual roots: <alpha_i, v> <= 0, <alpha_j, v> >= 0
// for all j != i, and <alpha_i, v + reflect_j(v)> >= 0 for all j != i.
template <class T>
bool is_i_negative(const AmbientSpace& space, const GramMatrix& b,
                   const std::vector<T>& v, int i) {
    require_full_j(space);
    require_in_j(space, i);
    const int l = space.l();
    require(static_cast<int>(v.size()) == l, "ShapeMismatch", "class has wrong dimension");
    auto root = [&](int j) {
        std::vector<T> a(l);
        const auto r = dual_root(b, b.indices()[j]);
        for (int k = 0; k < l; ++k) a[k] = ScalarTraits<T>::from_rational(r[k]);
        return a;
    };
    const auto alpha_i = root(i);
    if (ScalarTraits<T>::is_positive(pairing(b, alpha_i, v))) return false;
    for (int j = 0; j < l; ++j) {
        if (j == i) continue;
        if (ScalarTraits<T>::is_negative(pairing(b, root(j), v))) return false;
        std::vector<T> sum = apply_involution(space, j, v);
        for (int k = 0; k < l; ++k) sum[k] += v[k];
        if (ScalarTraits<T>::is_negative(pairing(b, alpha_i, sum))) return false;
    }
    return true;
}

// Orthogonal projection killing h_i: v - (<v, h_i>/<h_i, h_i>) h_i.
template <class T>
std::vector<T> project_off_factor(const AmbientSpace& space, const GramMatrix& b,
                                  std::vector<T> v, int i) {
    require_full_j(space);
    require_in_j(space, i);
    require(static_cast<int>(v.size()) == space.l(), "ShapeMismatch",
            "class has wrong dimension");
    const Matrix<Rational>& p = b.pairing_matrix();
    require(p(i, i) != 0, "SingularGram", "self-pairing of the projection axis is zero");
    T inner = ScalarTraits<T>::from_rational(Rational(0));
    for (int k = 0; k < space.l(); ++k)
        inner += ScalarTraits<T>::from_rational(p(k, i)) * v[k];
    v[i] -= inner / ScalarTraits<T>::from_rational(p(i, i));
    return v;
}

}  // namespace cyvol
