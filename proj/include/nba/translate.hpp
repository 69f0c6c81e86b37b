#pragma once

#include "nba/term.hpp"

namespace nba {

struct Target {
  enum class Kind { q, skew, star };
  Kind kind = Kind::q;
  int i = 1;

  static Target q() { return {Kind::q, 1}; }
  static Target skew(int i) { return {Kind::skew, i}; }
  static Target star() { return {Kind::star, 1}; }
};

/// Rewrites `t` into the target signature, preserving its value in every nBA.
///
///   Q        q nodes and constants only (elaboration of t and binary nodes).
///   STAR     singleton t[k] nodes and constants only; q(x, y_1..y_n) becomes
///            t[1](x, t[2](x, ..., t[n-1](x, y_n, y_{n-1}) ..., y_2), y_1).
///   SKEW(i)  and[i], bv[i], sub[i] and e_i only; t[i](x,y,z) becomes
///            bv[i](and[i](x,y), sub[i](z,x)).
///
/// SKEW(i) accepts sources built from variables, e_i, t[i], and[i], bw[i], bv[i],
/// sub[i], and q when n = 2; anything else throws PreconditionError.
Term translate_term(const Term& t, Dim n, Target target);

}  // namespace nba
