#pragma once

#include <string>

#include "qadj/mq.hpp"
#include "qadj/scalar.hpp"

namespace qadj {

/// Scalars: integers, q, + - * / ^ and parentheses, e.g. "(q^2-1)/(q+1)",
/// "q^-2", "-3/4". Throws ParseError.
RatFunc parse_scalar(const std::string& text);

/// A rational number in the same grammar without q.
Rational parse_rational(const std::string& text);

/// Elements of O(M_q): the scalar grammar plus generators x11..xNN, det,
/// sigma1..sigmaN and tau1..tauN. Division only by scalars; products are
/// taken in the order written.
MqElement<RatFunc> parse_mq(MqAlgebra<RatFunc>& A, const std::string& text);

/// Coefficientwise q -> q0.
MqElement<Rational> specialize(const MqElement<RatFunc>& f, const Rational& q0);

}  // namespace qadj
