#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyvol/ambient.hpp"
#include "cyvol/error.hpp"
#include "cyvol/lorentz.hpp"
#include "cyvol/quadratic.hpp"
#include "cyvol/scalar.hpp"
#include "cyvol/weyl.hpp"

namespace cyvol {

struct SimplicialCone {
    std::vector<std::vector<Rational>> generators;
};

// The nef cone is the simplicial cone on the hyperplane classes h_i.
inline SimplicialCone nef_cone(const AmbientSpace& space) {
    SimplicialCone cone;
    for (int i = 0; i < space.l(); ++i) {
        std::vector<Rational> h(space.l(), Rational(0));
        h[i] = 1;
        cone.generators.push_back(std::move(h));
    }
    return cone;
}

// Extremal rays of the fundamental chamber: omega_{i^ j} = (b_ij/2) alpha_i
// + alpha_j for every ordered pair i != j, in lexicographic pair order.
// Coordinate i of each ray vanishes; the others are positive.
inline std::vector<std::vector<Rational>> fundamental_extremal_rays(const AmbientSpace& space,
                                                                    const GramMatrix& b) {
    require_full_j(space);
    const int l = space.l();
    require(l >= 2, "EmptySubset", "need at least two factors for chamber rays");
    std::vector<std::vector<Rational>> rays;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            const Rational half_b = Rational(b_coefficient(space, i, j)) / 2;
            const auto ai = dual_root(b, i);
            const auto aj = dual_root(b, j);
            std::vector<Rational> omega(l);
            for (int k = 0; k < l; ++k) omega[k] = half_b * ai[k] + aj[k];
            rays.push_back(std::move(omega));
        }
    return rays;
}

// Closed membership test for the fundamental chamber: nonnegative coordinates
// and nonnegative pairing against every dual root.
template <class T>
bool in_fundamental_cone(const AmbientSpace& space, const GramMatrix& b,
                         const std::vector<T>& v) {
    require_full_j(space);
    require(static_cast<int>(v.size()) == space.l(), "ShapeMismatch",
            "class has wrong dimension");
    for (const T& x : v)
        if (ScalarTraits<T>::is_negative(x)) return false;
    for (int j = 0; j < space.l(); ++j) {
        std::vector<T> alpha(space.l());
        const auto r = dual_root(b, b.indices()[j]);
        for (int k = 0; k < space.l(); ++k) alpha[k] = ScalarTraits<T>::from_rational(r[k]);
        if (ScalarTraits<T>::is_negative(pairing(b, alpha, v))) return false;
    }
    return true;
}

template <class T>
struct EigenPairT {
    T lambda;
    std::vector<T> vec;  // last nonzero coordinate normalized to 1
    int i = 0, j = 0;
};

using EigenPair = EigenPairT<double>;
using EigenPairExact = EigenPairT<QuadExt>;

// Expanding eigenpair of the composite reflection in positions i then j:
// on the (i,j) block the matrix is [[-1,-b],[b,b^2-1]], giving
// lambda = ((b^2-2) + b sqrt(b^2-4))/2 with block eigenvector (-b, lambda+1);
// the remaining coordinates follow from the triangular complement.
inline EigenPairExact coxeter_pair_eigen_exact(const AmbientSpace& space, int i, int j) {
    require_in_j(space, i);
    require_in_j(space, j);
    require(i != j, "IndexOutOfRange", "eigenpair needs two distinct indices");
    const Int b = b_coefficient(space, i, j);
    require(b >= 3, "EllipticPair",
            "composite of the two reflections has finite order; no expanding eigenvalue",
            {{"b", to_string(b)}});
    const Rational br(b);
    const QuadExt root = QuadExt(Rational(0), Rational(1), b * b - 4);
    const QuadExt lambda = (QuadExt((br * br - 2) / 2)) + QuadExt(br / 2) * root;

    const int l = space.l();
    std::vector<QuadExt> v(l, QuadExt(Rational(0)));
    v[i] = QuadExt(-br);
    v[j] = lambda + QuadExt(Rational(1));
    for (int k = 0; k < l; ++k) {
        if (k == i || k == j) continue;
        const Rational bki(b_coefficient(space, k, i));
        const Rational bkj(b_coefficient(space, k, j));
        v[k] = (QuadExt(bki) * v[i] + QuadExt(bkj + bki * br) * v[j]) /
               (lambda - QuadExt(Rational(1)));
    }
    int last = -1;
    for (int k = 0; k < l; ++k)
        if (v[k].sign() != 0) last = k;
    const QuadExt scale = v[last];
    for (auto& x : v) x = x / scale;
    return EigenPairExact{lambda, std::move(v), i, j};
}

inline EigenPair coxeter_pair_eigen(const AmbientSpace& space, int i, int j) {
    const EigenPairExact e = coxeter_pair_eigen_exact(space, i, j);
    EigenPair out;
    out.lambda = e.lambda.to_double();
    for (const auto& x : e.vec) out.vec.push_back(x.to_double());
    out.i = i;
    out.j = j;
    return out;
}

// Power iteration along the composite reflection: (iota_i* iota_j*)^m base,
// rescaled to coordinate sum 1, for m = 1..steps.
template <class T>
std::vector<std::vector<T>> limit_root_iterate(const AmbientSpace& space, int i, int j,
                                               std::vector<T> base, int steps) {
    require_in_j(space, i);
    require_in_j(space, j);
    require(i != j, "IndexOutOfRange", "iteration needs two distinct indices");
    std::vector<std::vector<T>> out;
    std::vector<T> v = std::move(base);
    for (int m = 0; m < steps; ++m) {
        v = apply_involution(space, i, apply_involution(space, j, std::move(v)));
        T sum = ScalarTraits<T>::from_rational(Rational(0));
        for (const T& x : v) sum += x;
        std::vector<T> scaled = v;
        for (T& x : scaled) x /= sum;
        out.push_back(std::move(scaled));
    }
    return out;
}

// Boundary classes of the effective cone, built from chamber faces and
// expanding eigenvectors.
inline std::vector<Rational> boundary_face(const AmbientSpace& space, int j,
                                           const std::vector<Rational>& coeffs) {
    require(j >= 0 && j < space.l(), "IndexOutOfRange", "face index out of range");
    require(static_cast<int>(coeffs.size()) == space.l() - 1, "ShapeMismatch",
            "face needs one coefficient per remaining factor");
    std::vector<Rational> v(space.l(), Rational(0));
    int pos = 0;
    for (int k = 0; k < space.l(); ++k) {
        if (k == j) continue;
        require(coeffs[pos] >= 0, "NegativeCoefficient",
                "boundary coefficients must be nonnegative");
        v[k] = coeffs[pos++];
    }
    return v;
}

template <class T>
std::vector<T> boundary_lambda(const AmbientSpace& space, int i, int j,
                               const Rational& a_lambda, const std::vector<Rational>& coeffs,
                               const std::vector<T>& eigvec) {
    require(static_cast<int>(coeffs.size()) == space.l() - 2, "ShapeMismatch",
            "lambda point needs one coefficient per fixed factor");
    require(a_lambda >= 0, "NegativeCoefficient", "boundary coefficients must be nonnegative");
    std::vector<T> v(space.l());
    for (int k = 0; k < space.l(); ++k)
        v[k] = ScalarTraits<T>::from_rational(a_lambda) * eigvec[k];
    int pos = 0;
    for (int k = 0; k < space.l(); ++k) {
        if (k == i || k == j) continue;
        require(coeffs[pos] >= 0, "NegativeCoefficient",
                "boundary coefficients must be nonnegative");
        v[k] += ScalarTraits<T>::from_rational(coeffs[pos++]);
    }
    return v;
}

inline std::vector<QuadExt> boundary_lambda_exact(const AmbientSpace& space, int i, int j,
                                                  const Rational& a_lambda,
                                                  const std::vector<Rational>& coeffs) {
    return boundary_lambda(space, i, j, a_lambda, coeffs,
                           coxeter_pair_eigen_exact(space, i, j).vec);
}

inline std::vector<double> boundary_lambda_double(const AmbientSpace& space, int i, int j,
                                                  const Rational& a_lambda,
                                                  const std::vector<Rational>& coeffs) {
    return boundary_lambda(space, i, j, a_lambda, coeffs, coxeter_pair_eigen(space, i, j).vec);
}

template <class T>
std::vector<T> boundary_pushed(const AmbientSpace& space, const Word& w, std::vector<T> inner) {
    return apply_word(space, w, std::move(inner));
}

}  // namespace cyvol
