#pragma once

// Sextic chains phi(t1) = phi(t2) = ... and the two parametric families.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sextic/exact_core.hpp"
#include "sextic/polynomial.hpp"

namespace sextic {

struct Triple {
  BigRat x, y, z;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// x^6 + y^6 + z^6 - 2x^3y^3 - 2x^3z^3 - 2y^3z^3.
BigRat phi(const Triple& t);

/// phi as a polynomial in the named variables.
MPoly phi_polynomial(const std::string& x = "x", const std::string& y = "y", const std::string& z = "z");
/// x^2 + y^2 + z^2 + xy + yz + zx
MPoly quadratic_form();
/// x^3 + y^3 + z^3 + 2(x^2y + xy^2 + x^2z + xz^2 + y^2z + yz^2) + 2xyz
MPoly cubic_form();

struct ChainSolution {
  std::vector<Triple> triples;
  BigRat phi_value;
  /// Two members coincide, possibly after swapping x and y.
  bool trivial = false;
};

/// Same triple up to exchanging x and y.
bool same_up_to_swap(const Triple& a, const Triple& b);

/// Checks phi agrees on every triple. Throws ChainMismatch at the first
/// disagreement and std::invalid_argument for fewer than two triples.
ChainSolution verify_chain(const std::vector<Triple>& triples);

/// Scales all coordinates jointly to coprime integers, then makes the first
/// nonzero coordinate of the first triple positive. Throws DegenerateInput
/// when every coordinate is zero.
std::vector<Triple> normalize_chain(const std::vector<Triple>& triples);

/// True when b is a common rational multiple of a after reordering triples
/// and swapping x, y inside triples.
bool chains_equivalent(const std::vector<Triple>& a, const std::vector<Triple>& b);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Exact polynomial checks of phi = (x^3+y^3-z^3)^2 - 4(xy)^3 and
/// phi = 4Q^3 - 3C^2. With corrupt_phi the x^3y^3 coefficient of phi is
/// changed from -2 to -1 first (both checks must then fail).
std::vector<IdentityCheck> verify_core_identities(bool corrupt_phi = false);

/// Two known solutions of x + y + hz = k1, Q = k2, C = k3 with Q and C
/// symmetric in x and y (polynomials in "x", "y", "z").
struct PairSeed {
  Triple sol1, sol2;
  BigRat h, k1, k2, k3;
  MPoly Q, C;
};

/// Builds the seed, deriving k1..k3 from sol1 and checking sol2 against them.
/// Throws DegenerateInput when the two solutions coincide up to x<->y or an
/// equation fails, std::invalid_argument when Q or C is not symmetric.
PairSeed make_seed(const Triple& sol1, const Triple& sol2, const BigRat& h, const MPoly& Q, const MPoly& C);

/// Coefficients c0..c3 of the cubic in z obtained by eliminating x and y.
/// Works over polynomial coefficients so h and k_i may be symbolic; the
/// names x, y, z, e1, e2 are reserved. Throws DegenerateInput when Q,
/// reduced to e1, e2, z, is not linear in e2 with a nonzero constant
/// coefficient.
std::array<MPoly, 4> eliminate_to_cubic(const MPoly& Q, const MPoly& C, const MPoly& h, const MPoly& k1,
                                        const MPoly& k2, const MPoly& k3);

/// The remaining root of the eliminated cubic after dividing out the two
/// known roots. DegenerateInput when the cubic's leading coefficient is zero;
/// InternalError when the known roots do not divide exactly.
BigRat third_root(const PairSeed& seed);

/// With z = gamma3: x + y = k1 - h*z, xy from the Q-equation, and both
/// orderings when the discriminant is a rational square.
std::optional<std::pair<Triple, Triple>> complete_triple(const PairSeed& seed, const BigRat& gamma3);

/// Completion discriminant (x - y)^2 at z = gamma3.
BigRat completion_discriminant(const PairSeed& seed, const BigRat& gamma3);

// ---- family 1 ----------------------------------------------------------------

PairSeed family1_pair(const BigRat& m, const BigRat& n, const BigRat& p, const BigRat& q);

/// Published closed form for the third root, evaluated at a point.
BigRat family1_gamma3_closed(const BigRat& m, const BigRat& n, const BigRat& p, const BigRat& q);

/// (k1 - h*gamma3)^2 - 4*k2 over the common denominator. Both parts are
/// polynomials in m, n, p, q; the denominator is the square of the cubic's
/// leading coefficient, (t^3 - 1)^2 with t = m^2 - mn + n^2.
struct SymbolicQuartic {
  MPoly numerator;
  MPoly denominator;
};
SymbolicQuartic family1_quartic_symbolic();

/// The completion quartic in p, q at given m, n. DegenerateInput when t^3 = 1.
MPoly family1_quartic(const BigRat& m, const BigRat& n);

std::pair<BigRat, BigRat> family1_pq_choice(const BigRat& m, const BigRat& n);

/// Evaluates the nine-coordinate parametric chain and normalizes it.
ChainSolution family1_chain(const BigRat& m, const BigRat& n);

/// Same chain built the long way: pair at the (p, q) choice, third root,
/// completion. Triple order: sol1, sol2, completion.
ChainSolution family1_chain_by_elimination(const BigRat& m, const BigRat& n);

// ---- family 2 ----------------------------------------------------------------

PairSeed family2_pair(const BigRat& p, const BigRat& q, const BigRat& r, const BigRat& m);

BigRat family2_gamma3_closed(const BigRat& p, const BigRat& q, const BigRat& r, const BigRat& m);

struct ConditionQuartic {
  MPoly quartic;  // in "m"
  bool degenerate = false;
  std::string reason;
};

/// With q = 0: the completion discriminant as a polynomial in m.
ConditionQuartic family2_condition_quartic(const BigRat& p, const BigRat& r);

/// q = 0 pipeline. DegenerateInput when the condition is not a square at m
/// or the pair degenerates; a repeated member sets the trivial flag.
ChainSolution family2_chain(const BigRat& p, const BigRat& r, const BigRat& m);

/// Text layout: one "(x_i, y_i, z_i) = (a, b, c)" line per triple.
std::string format_chain(const ChainSolution& chain);

}  // namespace sextic
