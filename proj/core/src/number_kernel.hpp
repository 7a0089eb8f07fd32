#pragma once

// Closed-form deformed numbers, templated on the scalar so the Stirling solver
// can evaluate them in extended precision.

#include <cmath>

#include "rpq/deformation.hpp"

namespace rpq::detail {

template <class T>
T kind_number(Kind kind, const T& p, const T& q, const T& mu, const T& nu, const T& g,
              const T& x) {
    using std::pow;
    const T one(1);
    switch (kind) {
        case Kind::ArikCoon:
            return (one - pow(q, x)) / (one - q);
        case Kind::Quesne:
            return (one - pow(q, -x)) / (q - one);
        case Kind::JagannathanSrinivasa:
            return (pow(p, x) - pow(q, x)) / (p - q);
        case Kind::ChakrabartyJagannathan:
            return (pow(p, -x) - pow(q, x)) / (one / p - q);
        case Kind::GeneralizedQuesne:
            return (pow(p, x) - pow(q, -x)) / (q - one / p);
        case Kind::MultiParameter: {
            const T scale = pow(q, nu * x) / pow(p, mu * x);
            return g * scale * (pow(p, x) - pow(q, -x)) / (q - one / p);
        }
        case Kind::Custom:
            break;
    }
    return T(0);
}

}  // namespace rpq::detail
