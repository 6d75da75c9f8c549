#include "forcelab/exact.hpp"

#include <numeric>
#include <sstream>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <int D>
bool is_zero(const QuadraticRational<D>& x) {
  return x.is_zero();
}

// Multiplies each row by the lcm of its denominators.
Matrix<Integer> clear_denominators(const RationalMatrix& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (const Rational& x : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
  }
  return out;
}

// Fraction-free elimination. Every division by the previous pivot is exact
// because each updated entry is a minor of the input.
std::size_t bareiss_rank(Matrix<Integer> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, rank);
    const Integer& p = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer factor = m(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = p * m(r, j) - factor * m(rank, j);
        mpz_divexact(m(r, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

// Gauss-Jordan to reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> reduce_rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, row);
    const T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      const T factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class T>
std::vector<std::vector<T>> nullspace_from_rref(const Matrix<T>& rref,
                                                const std::vector<std::size_t>& pivots) {
  const std::size_t cols = rref.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
RankNullity field_rank(Matrix<T> m) {
  const std::size_t rank = reduce_rref(m).size();
  return {rank, m.cols() - rank};
}

template <class T>
std::vector<std::vector<T>> field_nullspace(Matrix<T> m) {
  const auto pivots = reduce_rref(m);
  return nullspace_from_rref(m, pivots);
}

std::vector<std::size_t> rref_mod(ResidueMatrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, row);
    const std::uint32_t inv = f.inv(m(row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const std::uint32_t factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class T>
std::string entry_text(const T& x) {
  return to_string(x);
}
template <>
std::string entry_text(const std::uint32_t& x) {
  return std::to_string(x);
}

template <class T>
std::string matrix_text(const Matrix<T>& m, const CoeffDomain& d) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << d.name() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << entry_text(m(r, c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------

CoeffDomain CoeffDomain::prime_field(std::uint32_t p) {
  PrimeField check(p);
  return CoeffDomain(Kind::PrimeField, check.modulus());
}

std::string CoeffDomain::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::GaussianRationals:
      return "Q(i)";
    case Kind::EisensteinRationals:
      return "Q(sqrt-3)";
  }
  return "?";
}

CoeffDomain CoeffDomain::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "Q(i)") return gaussian_rationals();
  if (name == "Q(sqrt-3)") return eisenstein_rationals();
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    const std::string digits(name.substr(3, name.size() - 4));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() < 11) {
      const unsigned long long p = std::stoull(digits);
      if (p < (1ULL << 31)) return prime_field(static_cast<std::uint32_t>(p));
    }
  }
  throw ParseError("unknown coefficient domain \"" + std::string(name) + "\"");
}

RankNullity rank_nullity(const RationalMatrix& m) {
  const std::size_t rank = bareiss_rank(clear_denominators(m));
  return {rank, m.cols() - rank};
}

RankNullity rank_nullity(const ResidueMatrix& m, const PrimeField& field) {
  ResidueMatrix work = m;
  const std::size_t rank = rref_mod(work, field).size();
  return {rank, m.cols() - rank};
}

RankNullity rank_nullity(const GaussianMatrix& m) { return field_rank(m); }
RankNullity rank_nullity(const EisensteinMatrix& m) { return field_rank(m); }

ResidueMatrix reduce_mod(const RationalMatrix& m, const PrimeField& field) {
  return m.map([&](const Rational& x) { return field.reduce(x); });
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) { return field_nullspace(m); }

std::vector<std::vector<std::uint32_t>> nullspace_basis(const ResidueMatrix& m,
                                                        const PrimeField& field) {
  ResidueMatrix work = m;
  const auto pivots = rref_mod(work, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(work(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<GaussianVector> nullspace_basis(const GaussianMatrix& m) { return field_nullspace(m); }

std::vector<std::vector<EisensteinRational>> nullspace_basis(const EisensteinMatrix& m) {
  return field_nullspace(m);
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
  // Pivot columns of the transpose's echelon form are the greedy row basis.
  RationalMatrix t = m.transpose();
  return reduce_rref(t);
}

std::vector<RationalVector> express_in_row_basis(const RationalMatrix& basis,
                                                 const RationalMatrix& targets) {
  if (basis.cols() != targets.cols()) throw InvalidArgument("row basis: column mismatch");
  const std::size_t r = basis.rows();
  const std::size_t n = basis.cols();
  // Solve basis^T c = target^T for all targets at once.
  RationalMatrix aug(n, r + targets.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = basis(j, i);
    for (std::size_t t = 0; t < targets.rows(); ++t) aug(i, r + t) = targets(t, i);
  }
  const auto pivots = reduce_rref(aug);
  std::size_t basis_pivots = 0;
  for (std::size_t c : pivots) {
    if (c >= r) throw InvalidArgument("row basis: a target row is outside the span");
    ++basis_pivots;
  }
  if (basis_pivots != r) throw InvalidArgument("row basis: basis rows are dependent");
  std::vector<RationalVector> out;
  for (std::size_t t = 0; t < targets.rows(); ++t) {
    RationalVector c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = aug(i, r + t);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(RationalMatrix m) : domain_(CoeffDomain::rationals()), data_(std::move(m)) {}

ExactMatrix::ExactMatrix(ResidueMatrix m, std::uint32_t p)
    : domain_(CoeffDomain::prime_field(p)), data_(std::move(m)) {
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::uint32_t x : residues().row(r)) {
      if (x >= p) throw InvalidArgument("residue out of range for GF(" + std::to_string(p) + ")");
    }
  }
}

ExactMatrix::ExactMatrix(GaussianMatrix m)
    : domain_(CoeffDomain::gaussian_rationals()), data_(std::move(m)) {}

ExactMatrix::ExactMatrix(EisensteinMatrix m)
    : domain_(CoeffDomain::eisenstein_rationals()), data_(std::move(m)) {}

std::size_t ExactMatrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, data_);
}

std::size_t ExactMatrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, data_);
}

const RationalMatrix& ExactMatrix::rational() const {
  if (const auto* m = std::get_if<RationalMatrix>(&data_)) return *m;
  throw InvalidArgument("matrix is over " + domain_.name() + ", not Q");
}

const ResidueMatrix& ExactMatrix::residues() const {
  if (const auto* m = std::get_if<ResidueMatrix>(&data_)) return *m;
  throw InvalidArgument("matrix is over " + domain_.name() + ", not a prime field");
}

const GaussianMatrix& ExactMatrix::gaussian() const {
  if (const auto* m = std::get_if<GaussianMatrix>(&data_)) return *m;
  throw InvalidArgument("matrix is over " + domain_.name() + ", not Q(i)");
}

const EisensteinMatrix& ExactMatrix::eisenstein() const {
  if (const auto* m = std::get_if<EisensteinMatrix>(&data_)) return *m;
  throw InvalidArgument("matrix is over " + domain_.name() + ", not Q(sqrt-3)");
}

RankNullity ExactMatrix::rank_nullity() const {
  if (domain_.kind() == CoeffDomain::Kind::PrimeField) {
    return forcelab::rank_nullity(residues(), PrimeField(domain_.prime()));
  }
  return std::visit(
      [](const auto& m) -> RankNullity {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ResidueMatrix>) {
          return {};  // handled above
        } else {
          return forcelab::rank_nullity(m);
        }
      },
      data_);
}

bool ExactMatrix::is_symmetric() const {
  return std::visit(
      [](const auto& m) {
        if (!m.is_square()) return false;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = r + 1; c < m.cols(); ++c) {
            if (!(m(r, c) == m(c, r))) return false;
          }
        }
        return true;
      },
      data_);
}

std::string ExactMatrix::to_text() const {
  return std::visit([&](const auto& m) { return matrix_text(m, domain_); }, data_);
}

ExactMatrix ExactMatrix::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1;
  long long cols = -1;
  std::string domain_name;
  if (!(in >> rows >> cols >> domain_name) || rows < 0 || cols < 0 || rows > 100000 ||
      cols > 100000) {
    throw ParseError("matrix text: header must be \"rows cols domain\"");
  }
  const CoeffDomain domain = CoeffDomain::parse(domain_name);
  const auto r = static_cast<std::size_t>(rows);
  const auto c = static_cast<std::size_t>(cols);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() != r * c) {
    throw ParseError("matrix text: expected " + std::to_string(r * c) + " entries, found " +
                     std::to_string(tokens.size()));
  }
  switch (domain.kind()) {
    case CoeffDomain::Kind::Rationals: {
      RationalMatrix m(r, c);
      for (std::size_t i = 0; i < tokens.size(); ++i) m(i / c, i % c) = parse_rational(tokens[i]);
      return ExactMatrix(std::move(m));
    }
    case CoeffDomain::Kind::PrimeField: {
      const PrimeField f(domain.prime());
      ResidueMatrix m(r, c);
      for (std::size_t i = 0; i < tokens.size(); ++i) m(i / c, i % c) = f.reduce(parse_rational(tokens[i]));
      return ExactMatrix(std::move(m), domain.prime());
    }
    case CoeffDomain::Kind::GaussianRationals: {
      GaussianMatrix m(r, c);
      for (std::size_t i = 0; i < tokens.size(); ++i) m(i / c, i % c) = parse_gaussian(tokens[i]);
      return ExactMatrix(std::move(m));
    }
    case CoeffDomain::Kind::EisensteinRationals:
      break;
  }
  throw ParseError("matrix text: domain " + domain.name() + " has no text form");
}

RationalMatrix adjacency_rational(const Graph& g, long lambda) {
  const auto n = static_cast<std::size_t>(g.order());
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = -lambda;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) m(v, static_cast<std::size_t>(w)) = 1;
  }
  return m;
}

ExactMatrix adjacency_matrix(const Graph& g, long lambda, const CoeffDomain& domain) {
  RationalMatrix m = adjacency_rational(g, lambda);
  switch (domain.kind()) {
    case CoeffDomain::Kind::Rationals:
      return ExactMatrix(std::move(m));
    case CoeffDomain::Kind::PrimeField:
      return ExactMatrix(reduce_mod(m, PrimeField(domain.prime())), domain.prime());
    case CoeffDomain::Kind::GaussianRationals:
      return ExactMatrix(m.map([](const Rational& x) { return GaussianRational(x); }));
    case CoeffDomain::Kind::EisensteinRationals:
      return ExactMatrix(m.map([](const Rational& x) { return EisensteinRational(x); }));
  }
  throw InvalidArgument("unknown domain");
}

std::size_t adjacency_nullity(const Graph& g, long lambda, std::uint32_t p) {
  const RationalMatrix m = adjacency_rational(g, lambda);
  if (p == 0) return rank_nullity(m).nullity;
  const PrimeField f(p);
  return rank_nullity(reduce_mod(m, f), f).nullity;
}

}  // namespace forcelab
