#pragma once

#include "msplect/exterior.hpp"

namespace msplect {

// Thin complex layer over the real engine: values with Gaussian-rational
// coefficients, used by the expression parser to expand z/zbar inputs to
// real coordinates before anything touches the core.
template <typename T>
struct ComplexPair {
    T re, im;

    bool is_real() const { return im.is_zero(); }

    ComplexPair operator-() const { return {-re, -im}; }
    ComplexPair& operator+=(const ComplexPair& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexPair& operator-=(const ComplexPair& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend ComplexPair operator+(ComplexPair a, const ComplexPair& b) { return a += b; }
    friend ComplexPair operator-(ComplexPair a, const ComplexPair& b) { return a -= b; }
    bool operator==(const ComplexPair& o) const { return re == o.re && im == o.im; }

    ComplexPair conj() const { return {re, -im}; }
};

using CPoly = ComplexPair<Polynomial>;
using CForm = ComplexPair<Form>;
using CMultiVec = ComplexPair<MultiVec>;

inline CPoly cmul(const CPoly& a, const CPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <Variance V>
ComplexPair<Alternating<V>> cscale(const CPoly& s, const ComplexPair<Alternating<V>>& a) {
    return {s.re * a.re - s.im * a.im, s.re * a.im + s.im * a.re};
}

template <Variance V>
ComplexPair<Alternating<V>> cwedge(const ComplexPair<Alternating<V>>& a,
                                   const ComplexPair<Alternating<V>>& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

inline CForm cext_d(const CForm& a) { return {ext_d(a.re), ext_d(a.im)}; }

} // namespace msplect
