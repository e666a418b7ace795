/**
 * @file rewrite_data.hpp
 * @brief The three rewriting-rule tables, embedded verbatim as reviewable
 *        text data (one block per system).
 *
 * Line format:   lhs ~> rhs
 *   - words are space-separated generator tokens: 1, 2 for s_1, s_2 and
 *     1', 2' for their inverses; "e" denotes the empty word
 *   - rhs is a signed sum of terms "coeff . word" (coefficient omitted = 1),
 *     with coefficients in the expression language of coeffexpr.hpp
 *     (u = a+b+c, v = ab+bc+ac, w = abc)
 * Lines starting with '#' are comments; rule priority is line order.
 */
#pragma once

namespace cubiq::data {

/// The positive-word system: eight rules on the alphabet {1, 2}.
inline constexpr const char* kPositiveRules = R"TBL(
# positive system, alphabet 1 < 2
1 1 1 ~> u.1 1 - v.1 + w.e
2 2 2 ~> u.2 2 - v.2 + w.e
2 1 2 ~> 1 2 1
1 2 1 1 2 ~> 1 1 2 1 1 + a.2 1 1 2 - a.1 2 2 1 + a^2.2 2 1 - a^2.2 1 1 + a^2.1 2 2 - a^2.1 1 2 - a^3.2 2 + a^3.1 1 + a^4.2 - a^4.1
2 1 1 2 1 ~> 1 1 2 1 1 + a.2 1 1 2 - a.1 2 2 1 + a^2.2 2 1 - a^2.2 1 1 + a^2.1 2 2 - a^2.1 1 2 - a^3.2 2 + a^3.1 1 + a^4.2 - a^4.1
1 2 2 1 1 ~> 1 1 2 2 1 + a.2 2 1 1 + ((a^2+v)/a).1 2 1 1 - a.1 1 2 2 - ((a^2+v)/a).1 1 2 1 - a^2.2 2 1 - (a^2+v).2 1 1 + a^2.1 2 2 + (a^2+v).1 1 2 + ((a^2+v)*a).2 1 - ((a^2+v)*a).1 2
2 1 1 2 2 ~> 1 1 2 2 1 + u.2 1 1 2 - u.1 2 2 1 + v.2 2 1 - v.2 1 1
2 2 1 1 2 ~> 1 2 2 1 1 + u.2 1 1 2 - u.1 2 2 1 + v.1 2 2 - v.1 1 2
)TBL";

/// Signed system for the ordering 1 < 2 < 1' < 2' (23 rules).
inline constexpr const char* kSigned1Rules = R"TBL(
# signed system 1, ordering 1 < 2 < 1' < 2'
1 1' ~> e
2 2 ~> w.2' + u.2 - v.e
2 2' ~> e
1' 1 ~> e
2' 2 ~> e
2 1 2 ~> 1 2 1
1' 2 1 ~> 2 1 2'
1' 2' 1 ~> 2 1' 2'
2' 1 2 ~> 1 2 1'
2' 1' 2 ~> 1 2' 1'
2' 1' 2' ~> 1' 2' 1'
1 1 ~> w.1' + u.1 - v.e
1' 1' ~> (v/w).1' + (1/w).1 - (u/w).e
2' 2' ~> (v/w).2' + (1/w).2 - (u/w).e
1 2 1 2' ~> 2 1
1 2 1' 2 ~> w.2' 1 2' + u.1 2 1' - v.2' 1
2 1 2' 1 ~> w.1' 2 1' + u.2 1 2' - v.1' 2
2 1 2' 1' ~> 1' 2
2 1' 2' ~> a^-2.2 1 2' + 1 2' 1' - a^-2.1 2 1' - a.2' 1' + a^-1.2' 1 + a.1' 2' - a^-1.1' 2 + a^-1.2 1' - a^-3.2 1 - a^-1.1 2' + a^-3.1 2
1' 2' 1' ~> a^-2.1' 2 1' - ((b+c)/w).1 2' 1' - (1/(w*a)).1 2' 1 + ((b+c)/(w*a^2)).1 2 1' + (1/(w*a^3)).1 2 1 + (v/w).2' 1' + (1/w).2' 1 + a^-1.1' 2' - a^-3.1' 2 - (v/(w*a^2)).2 1' - (1/(w*a^2)).2 1 + (u/(w*a)).1 2' - (u/(w*a^3)).1 2 - ((a^2+v)/(w*a)).2' + ((a^2+v)/(w*a^3)).2
2' 1 2' ~> a^2.1' 2' 1' + (1/(b*c)).2 1' 2 + ((a*(b+c))/(b*c)).1 2' 1' - ((b+c)/w).1 2 1' - (1/(w*a)).1 2 1 - ((v*a)/(b*c)).2' 1' + (v/w).2' 1 - a.1' 2' - (u/(b*c)).1' 2 - (a/(b*c)).2 1' + (1/w).2 1 + a^-1.1 2' + (u/(w*a)).1 2 + ((a^2+v)/(b*c)).1' - ((a^2+v)/(w*a)).1
2 1' 2 1' ~> (1/(b*c)).2 1 2' 1 + a^2.1 2' 1' 1' - 1 2 1' 1' - a^3.2' 1' 1' + (a*(a^2+b*c)).1' 2' 1' - ((a^2+b*c)/a).1' 2 1' + a.2 1' 1' + a^-1.2 1' 2 - ((a^2+v)/w).2 1 2' + (b+c-2*a).1 2' 1' + a^-1.1 2' 1 - ((b+c-a)/a^2).1 2 1' - a^-3.1 2 1 + a^2.2' 1' - 2' 1 - (a^2+b*c).1' 2' + ((a^3*(b+c)+2*a^2*b*c+b^2*c^2)/(w*a)).1' 2 + (((b+c)*a^3+(b+c)^2*a^2+2*w*(b+c)+(b*c)^2)/(w*a)).2 1' + ((a^2+b*c+v)/(w*a)).2 1 - ((b+c)/a).1 2' + (u/a^3).1 2 + a.2' - ((a+b)*(a+c)*v/w).1' - ((a^4+2*a^3*(b+c)+a^2*(b^2+5*b*c+c^2)+2*w*(b+c)+b^2*c^2)/(w*a^2)).2 - ((a^2+v)/w).1 + ((a+b)^2*(a+c)^2/(w*a)).e
1' 2 1' 2 ~> a.1' 2 1' + a^-1.2 1' 2 - a^-1.2 1 2' - a.1 2' 1' + a^2.2' 1' + v.1' 2' + ((u*v)/w).1' 2 - 2 1' + a^-2.2 1 + 1 2' + (u/w).1 2 - ((a^2+v)/a).2' - ((a+b)*(a+c)*v/w).1' - ((u*(a^2+v))/(w*a)).2 - ((a^2+v)/w).1 + ((a+b)^2*(a+c)^2/(w*a)).e
)TBL";

/// Signed system for the ordering 1 < 1' < 2 < 2' (21 rules).
inline constexpr const char* kSigned2Rules = R"TBL(
# signed system 2, ordering 1 < 1' < 2 < 2'
1 1' ~> e
1' 1 ~> e
2 2 ~> w.2' + u.2 - v.e
2 2' ~> e
2' 2 ~> e
2 1 2 ~> 1 2 1
2 1 2' ~> 1' 2 1
2 1' 2' ~> 1' 2' 1
2' 1 2 ~> 1 2 1'
2' 1' 2 ~> 1 2' 1'
2' 1' 2' ~> 1' 2' 1'
1 1 ~> w.1' + u.1 - v.e
1' 1' ~> (v/w).1' + (1/w).1 - (u/w).e
2' 2' ~> (v/w).2' + (1/w).2 - (u/w).e
1 2 1' 2 ~> w.2' 1 2' + u.1 2 1' - v.2' 1
1' 2' 1 ~> a^-2.1' 2 1 + 1 2' 1' - a^-2.1 2 1' - a.2' 1' + a^-1.2' 1 + a^-1.2 1' - a^-3.2 1 + a.1' 2' - a^-1.1' 2 - a^-1.1 2' + a^-3.1 2
1' 2' 1' ~> a^-2.1' 2 1' - ((b+c)/w).1 2' 1' - (1/(w*a)).1 2' 1 + ((b+c)/(w*a^2)).1 2 1' + (1/(w*a^3)).1 2 1 + (v/w).2' 1' + (1/w).2' 1 - (v/(w*a^2)).2 1' - (1/(w*a^2)).2 1 + a^-1.1' 2' - a^-3.1' 2 + (u/(w*a)).1 2' - (u/(w*a^3)).1 2 - ((a^2+v)/(w*a)).2' + ((a^2+v)/(w*a^3)).2
2' 1 2' ~> (1/(b*c)).2 1' 2 + 1' 2 1' - (1/(b*c)).1 2' 1 + ((a^2+v)/w).2' 1 - ((a^2+v)/w).2 1' - ((a^2+v)/w).1' 2 + ((a^2+v)/w).1 2' - ((a^2+v)/(b*c)).2' + ((a^2+v)/(w*a)).2 + ((a^2+v)/(b*c)).1' - ((a^2+v)/(w*a)).1
1' 2 1' 2 ~> - (b*c).1' 2 1' 1' + ((b*c)/a^2).1 2 1' 1' + a^-1.2 1' 2 + ((a^2+v)/a).2 1' 1' + ((a^2+v)/a).1' 2 1' - a.1 2' 1' - (v/a^3).1 2 1' - a^-3.1 2 1 + a^2.2' 1' - ((a^3*(b+c)+a^2*(b^2+c^2+4*b*c)+2*w*(b+c)+(b*c)^2)/(w*a)).2 1' - (u/w).2 1 + v.1' 2' + ((u*(b+c))/(b*c)).1' 2 - (a^2+v).1' 1' + 1 2' + ((u*(a^2+b*c))/(w*a^2)).1 2 - ((a^2+v)/a).2' + ((a^2+v)/a^2).e
2 1' 2 1 ~> 1 2 1' 2 + u.1' 2 1 - u.1 2 1' + v.2' 1 - v.1 2'
2 1' 2 1' ~> 1' 2 1' 2 + v.2' 1' + ((u*v)/w).2 1' + (u/w).2 1 - v.1' 2' - ((u*v)/w).1' 2 - (u/w).1 2
)TBL";

/// The 20 positive avoiding words (frozen positive-basis table).
inline constexpr const char* kPositiveBasis =
    "e | 1 | 2 | 1 1 | 1 2 | 2 1 | 2 2 | 1 1 2 | 1 2 1 | 1 2 2 | 2 1 1 | 2 2 1 | "
    "1 1 2 1 | 1 1 2 2 | 1 2 1 1 | 1 2 2 1 | 2 1 1 2 | 2 2 1 1 | 1 1 2 1 1 | 1 1 2 2 1";

/// The 20 signed avoiding words for the first ordering.
inline constexpr const char* kSigned1Basis =
    "e | 1 | 2 | 1' | 2' | 1 2 | 1 2' | 2 1 | 2 1' | 1' 2 | 1' 2' | 2' 1 | 2' 1' | "
    "1 2 1 | 1 2 1' | 1 2' 1 | 1 2' 1' | 2 1 2' | 2 1' 2 | 1' 2 1'";

/// The 20 signed avoiding words for the second ordering.
inline constexpr const char* kSigned2Basis =
    "e | 1 | 1' | 2 | 2' | 1 2 | 1 2' | 1' 2 | 1' 2' | 2 1 | 2 1' | 2' 1 | 2' 1' | "
    "1 2 1 | 1 2 1' | 1 2' 1 | 1 2' 1' | 1' 2 1 | 1' 2 1' | 2 1' 2";

/// The alternative 20-element basis of the "another basis" section.
inline constexpr const char* kAltBasis =
    "e | 2' | 2' 1' | 2' 1 | 1' | 1' 2' | 1' 2 | 1 | 1 2' | 1 2 | "
    "2 | 2 1' | 2 1 | 2' 1' 2' | 2 1' 2' | 2 1 2' | 2' 1' 2 | 2 1 2 | 2' 1 2' | 1' 2 1'";

}  // namespace cubiq::data
