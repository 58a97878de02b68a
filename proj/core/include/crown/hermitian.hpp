#pragma once

#include <complex>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crown/polytope.hpp"

namespace crown::hermitian {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// One instantiated compactly causal pair (g, s).
struct CausalPair {
  std::string row_id;
  std::string g;  ///< instantiated label, e.g. "sp(1,2)"
  std::string s;
  std::map<std::string, long> params;
  int rank_g = 0;
  int rank_s = 0;
  bool cayley = false;
  bool group_case = false;
  /// Whether the published list of equal-crown pairs contains this row
  /// (group-case rows: the group-case statement).
  bool published = false;
  std::string sigma;      ///< root type of g in the common flat: A_in, B, C, BC, D
  std::string sigma_hat;  ///< C or BC
  std::string anchor;
};

struct PairFamily {
  std::string row_id;
  std::string g_pattern;
  std::string s_pattern;
  std::vector<std::string> params;
  bool cayley = false;
  bool group_case = false;
};

/// All encoded families: the simple-s rows followed by the group-case rows.
const std::vector<PairFamily>& families();

/// Instantiates a family; throws std::invalid_argument if the parameters
/// violate the row constraints.
CausalPair instantiate(const std::string& row_id, const std::map<std::string, long>& params);

/// Every family matching `label`.  The label is either a g label ("so(1,5)",
/// "sl(3,R)+R") or "g/s".  Throws std::invalid_argument if nothing matches.
std::vector<CausalPair> match_pair(const std::string& label);

/// All instances with every parameter in [1, max_param].
std::vector<CausalPair> enumerate_pairs(int max_param);

/// Rank criterion: rank g = rank s / 2.
bool classify_xi0(const CausalPair& pair);

struct SigmaCheck {
  bool encoded = false;  ///< both root systems are buildable at this rank
  bool omega_equal = false;
  std::string detail;
};

/// Compares Omega(Sigma) with Omega(Sigma-hat) exactly in the common flat.
SigmaCheck sigma_cross_check(const CausalPair& pair);

/// JSON object {pair, ranks, xi_equals_xi0, ...}.
std::string classification_json(const std::vector<CausalPair>& matches);

/// Jordan algebra rows: {v, group, hermitian_group, kind, row}.
struct JordanRow {
  std::string v, group, hermitian_group, kind, row;
};
const std::vector<JordanRow>& jordan_algebra_table();

/// Closed box |x_j| <= 1/2 in pi/2 units, coordinates against the H_j basis.
HPolytope omega0_box(int s);
/// Vertex-set equality of omega0_box(s) with the closure of Omega for type
/// `label` ("C" or "BC") of rank s.
bool omega0_box_matches(int s, const std::string& label);

/// |Im z_j| < pi/4.
struct StripPoint {
  std::vector<cplx> z;
  static StripPoint make(std::vector<cplx> z);
};
/// |w_j| < 1.
struct DiskPoint {
  std::vector<cplx> w;
  static DiskPoint make(std::vector<cplx> w);
};

DiskPoint tanh_map(const StripPoint& p);
StripPoint artanh_map(const DiskPoint& d);

enum class MatrixGroup {
  kNone,
  kSUpq,   ///< g^* I_{p,q} g = I_{p,q}, det g = 1; Z is p x q
  kSOstar  ///< g in SU(n,n) with g^t [[0,I],[I,0]] g = [[0,I],[I,0]]; Z antisymmetric n x n
};

/// Defect of g from the group (max of the relation residuals).
double group_residual(const CMat& g, MatrixGroup group, int p);

/// I - Z^* Z positive definite (and Z antisymmetric for kSOstar).
bool in_ball(const CMat& Z, MatrixGroup group = MatrixGroup::kNone, double tol = 1e-12);

/// g(Z) = (AZ + B)(CZ + D)^{-1} with A of size Z.rows().  When `group` is not
/// kNone, g is checked against the group relations to 1e-10.
CMat mobius(const CMat& g, const CMat& Z, MatrixGroup group = MatrixGroup::kNone);

/// exp of a random Lie algebra element of size `spread`.
CMat random_group_element(MatrixGroup group, int p, int q, std::mt19937_64& rng, double spread = 0.5);
/// Random point of the matrix ball of operator norm < radius.
CMat random_ball_point(MatrixGroup group, int p, int q, std::mt19937_64& rng, double radius = 0.9);

enum class AppendixCase { kSOpq, kSOnC };
AppendixCase parse_appendix_case(const std::string& s);
const char* to_string(AppendixCase c);

/// Generator e_j (0-based j) of the flat.  SO(p,q): (p+q) square, p <= q.
/// SO(n,C): 2n square in the [[A,B],[-B,A]] realization.
CMat appendix_generator(AppendixCase c, int j, int p_or_n, int q = 0);

struct AppendixReport {
  AppendixCase which = AppendixCase::kSOpq;
  int p = 0, q = 0, n = 0;
  std::vector<cplx> z;
  CMat a0;           ///< a(0) from the matrix exponential
  CMat closed_form;  ///< tanh form
  double residual = 0;       ///< max |a0 - closed_form|
  double gram_residual = 0;  ///< max |a0^* a0 - diag(|tanh z|^2)|
  bool in_ball = false;
  std::string to_json() const;
};

/// a = exp(sum z_j e_j) applied to 0 and compared with the tanh closed form.
/// Throws std::domain_error if some |Im z_j| >= pi/4.
AppendixReport appendix_orbit_check(AppendixCase c, int p_or_n, int q, const std::vector<cplx>& z);

}  // namespace crown::hermitian
