#include "relkummer/fpgmod.hpp"

#include <algorithm>

#include "relkummer/errors.hpp"

namespace relkummer {

namespace {

// Row-echelon accumulator for membership tests in a growing span.
class IncrementalBasis {
 public:
  IncrementalBasis(std::size_t n, std::uint32_t p) : n_(n), p_(p) {}

  // Adds v if it is independent of the current span; returns whether it was.
  bool add(const FpVector& v) {
    FpVector r = reduce(v);
    const auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t c) { return c != 0; });
    if (it == r.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - r.begin());
    r = fp::scale(r, fp::inverse(r[pivot], p_), p_);
    rows_.emplace_back(pivot, std::move(r));
    return true;
  }

  bool contains(const FpVector& v) const { return fp::is_zero(reduce(v)); }
  std::size_t size() const { return rows_.size(); }

 private:
  FpVector reduce(FpVector v) const {
    if (v.size() != n_) throw DomainError("vector length mismatch");
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] != 0) v = fp::sub(v, fp::scale(row, v[pivot], p_), p_);
    }
    return v;
  }

  std::size_t n_;
  std::uint32_t p_;
  std::vector<std::pair<std::size_t, FpVector>> rows_;
};

FpMatrix presentation_matrix(const FpMatrix& ambient_x, const std::vector<FpVector>& basis,
                             std::size_t ambient_dim, std::uint32_t p) {
  const FpMatrix b = FpMatrix::from_columns(basis, ambient_dim, p);
  std::vector<FpVector> columns;
  columns.reserve(basis.size());
  for (const auto& v : basis) {
    auto c = fp::solve(b, fp::apply(ambient_x, v));
    if (!c) throw DomainError("subspace is not stable under x");
    columns.push_back(std::move(*c));
  }
  return FpMatrix::from_columns(columns, basis.size(), p);
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::x_power(std::uint32_t p, std::uint64_t q, std::uint64_t i) {
  GroupAlgebraElement a{p, std::vector<std::uint32_t>(q, 0)};
  if (i < q) a.coeffs[i] = 1;
  return a;
}

GroupAlgebraElement GroupAlgebraElement::sigma_power(std::uint32_t p, std::uint64_t q,
                                                     std::uint64_t j) {
  GroupAlgebraElement result = x_power(p, q, 0);
  GroupAlgebraElement one_plus_x = x_power(p, q, 0);
  if (q > 1) one_plus_x.coeffs[1] = 1;
  for (std::uint64_t i = 0; i < j; ++i) result = multiply(result, one_plus_x);
  return result;
}

bool GroupAlgebraElement::is_zero() const { return fp::is_zero(coeffs); }

std::uint64_t GroupAlgebraElement::valuation() const {
  for (std::uint64_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) return i;
  }
  return coeffs.size();
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.p != b.p || a.q() != b.q()) throw DomainError("group algebra mismatch");
  GroupAlgebraElement c{a.p, std::vector<std::uint32_t>(a.q(), 0)};
  for (std::uint64_t i = 0; i < a.q(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint64_t j = 0; i + j < a.q(); ++j) {
      c.coeffs[i + j] = static_cast<std::uint32_t>(
          (c.coeffs[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % a.p);
    }
  }
  return c;
}

FpMatrix ideal_generators(const GroupAlgebraElement& a) {
  std::vector<FpVector> columns;
  for (std::uint64_t j = 0; j < a.q(); ++j) {
    columns.push_back(multiply(a, GroupAlgebraElement::x_power(a.p, a.q(), j)).coeffs);
  }
  return FpMatrix::from_columns(columns, a.q(), a.p);
}

void validate(const ModulePresentation& m) {
  if (m.x.rows() != m.x.cols()) throw InvariantViolation("x is not square");
  if (m.basis_labels.size() != m.dim()) throw InvariantViolation("basis labels do not match dimension");
  if (!fp::power(m.x, m.q).is_zero()) throw InvariantViolation("x^q is not zero");
}

std::size_t JordanType::total() const {
  std::size_t s = 0;
  for (auto v : parts) s += v;
  return s;
}

std::string JordanType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

JordanType jordan_type_of(const FpMatrix& x) {
  if (x.rows() != x.cols()) throw InvariantViolation("x is not square");
  const std::size_t n = x.rows();
  std::vector<std::size_t> ranks{n};
  FpMatrix power = FpMatrix::identity(n, x.modulus());
  while (ranks.back() > 0) {
    if (ranks.size() > n + 1) throw InvariantViolation("x is not nilpotent");
    power = fp::multiply(power, x);
    const std::size_t r = fp::rank(power);
    if (r == ranks.back()) throw InvariantViolation("x is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[j] = number of parts >= j
  JordanType type;
  for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
    const std::size_t at_least = ranks[j - 1] - ranks[j];
    const std::size_t above = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
    type.parts.insert(type.parts.end(), at_least - above, j);
  }
  return type;
}

JordanType jordan_type(const ModulePresentation& m) {
  JordanType t = jordan_type_of(m.x);
  if (!t.parts.empty() && t.parts.front() > m.q) throw InvariantViolation("x^q is not zero");
  return t;
}

FpMatrix jordan_matrix(const JordanType& type, std::uint32_t p) {
  FpMatrix x(type.total(), type.total(), p);
  std::size_t offset = 0;
  for (auto len : type.parts) {
    for (std::size_t i = 0; i + 1 < len; ++i) x(offset + i + 1, offset + i) = 1;
    offset += len;
  }
  return x;
}

std::vector<CyclicSummand> cyclic_decompose(const ModulePresentation& m) {
  const std::size_t n = m.dim();
  if (n == 0) return {};
  const JordanType type = jordan_type(m);
  const std::size_t top = type.parts.front();
  std::vector<FpMatrix> powers{FpMatrix::identity(n, m.p)};
  for (std::size_t h = 1; h <= top; ++h) powers.push_back(fp::multiply(powers.back(), m.x));
  std::vector<std::vector<FpVector>> kernels;
  for (std::size_t h = 0; h <= top; ++h) kernels.push_back(fp::nullspace(powers[h]));

  std::vector<CyclicSummand> out;
  for (std::size_t h = top; h >= 1; --h) {
    const auto need = static_cast<std::size_t>(std::count(type.parts.begin(), type.parts.end(), h));
    if (need == 0) continue;
    IncrementalBasis span(n, m.p);
    for (const auto& v : kernels[h - 1]) span.add(v);
    if (h < top) {
      for (const auto& v : kernels[h + 1]) span.add(fp::apply(m.x, v));
    }
    std::size_t found = 0;
    for (const auto& v : kernels[h]) {
      if (found == need) break;
      if (span.add(v)) {
        out.push_back(CyclicSummand{v, h});
        ++found;
      }
    }
    if (found != need) throw InvariantViolation("cyclic decomposition ran out of generators");
  }
  return out;
}

std::vector<FpVector> chain_basis(const ModulePresentation& m,
                                  const std::vector<CyclicSummand>& summands) {
  std::vector<FpVector> basis;
  for (const auto& s : summands) {
    FpVector v = s.generator;
    for (std::size_t j = 0; j < s.dimension; ++j) {
      basis.push_back(v);
      v = fp::apply(m.x, v);
    }
  }
  return basis;
}

ModulePresentation dual_module(const ModulePresentation& m) {
  const std::size_t n = m.dim();
  const FpMatrix s = fp::add(m.x, FpMatrix::identity(n, m.p));
  const auto s_inv = fp::inverse(s);
  if (!s_inv) throw InvariantViolation("sigma is not invertible; x is not nilpotent");
  ModulePresentation d;
  d.p = m.p;
  d.q = m.q;
  d.x = fp::sub(s_inv->transpose(), FpMatrix::identity(n, m.p));
  for (const auto& label : m.basis_labels) d.basis_labels.push_back(label + "*");
  return d;
}

FpVector dual_generator(const ModulePresentation& m) {
  const std::size_t l = m.dim();
  if (l == 0 || m.x != jordan_matrix(JordanType{{l}}, m.p)) {
    throw DomainError("module is not presented in a standard cyclic basis");
  }
  return fp::unit_vector(l, l - 1);
}

bool is_stable(const FpMatrix& x, const std::vector<FpVector>& basis) {
  if (basis.empty()) return true;
  const FpMatrix b = FpMatrix::from_columns(basis, x.rows(), x.modulus());
  return std::all_of(basis.begin(), basis.end(),
                     [&](const FpVector& v) { return fp::solve(b, fp::apply(x, v)).has_value(); });
}

ModulePresentation restrict_to(const ModulePresentation& m, const std::vector<FpVector>& basis) {
  if (fp::span_rank(basis, m.dim(), m.p) != basis.size()) {
    throw DomainError("restriction basis is not linearly independent");
  }
  ModulePresentation sub;
  sub.p = m.p;
  sub.q = m.q;
  sub.x = basis.empty() ? FpMatrix(0, 0, m.p) : presentation_matrix(m.x, basis, m.dim(), m.p);
  for (const auto& v : basis) sub.basis_labels.push_back(fp::to_string(v));
  return sub;
}

std::size_t cyclic_span_dimension(const FpMatrix& x, const FpVector& v) {
  IncrementalBasis span(x.rows(), x.modulus());
  FpVector cur = v;
  while (span.add(cur)) cur = fp::apply(x, cur);
  return span.size();
}

std::optional<FpVector> ClassModule::coordinates_of(const KummerClass& c) const {
  FpVector ambient;
  try {
    ambient = space.coordinates(c);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (basis.empty()) {
    if (fp::is_zero(ambient)) return FpVector{};
    return std::nullopt;
  }
  return fp::solve(FpMatrix::from_columns(basis, space.dimension(), presentation.p), ambient);
}

ClassModule span_closure(const std::vector<KummerClass>& generators, const GaloisContext& ctx) {
  std::vector<FactoredElement> reps;
  for (const auto& g : generators) reps.push_back(g.representative);
  ClassModule m;
  m.space = ClassSpace::closure_of(ctx, reps);
  const std::size_t dim = m.space.dimension();
  const FpMatrix x = m.space.x_matrix();

  IncrementalBasis span(dim, ctx.p);
  IncrementalBasis own(dim, ctx.p);
  for (const auto& g : generators) {
    FpVector v = m.space.coordinates(g);
    own.add(v);
    while (span.add(v)) {
      m.basis.push_back(v);
      v = fp::apply(x, v);
    }
  }
  m.generator_rank = own.size();
  for (const auto& v : m.basis) m.classes.push_back(m.space.class_at(v));

  m.presentation.p = ctx.p;
  m.presentation.q = ctx.q;
  m.presentation.x = m.basis.empty() ? FpMatrix(0, 0, ctx.p)
                                     : presentation_matrix(x, m.basis, dim, ctx.p);
  for (const auto& c : m.classes) {
    m.presentation.basis_labels.push_back(ratfunc::to_string(ctx.k(), c.representative));
  }
  return m;
}

ClassModule rebase(const ClassModule& m, const std::vector<FpVector>& new_basis) {
  const std::uint32_t p = m.presentation.p;
  if (new_basis.size() != m.basis.size() ||
      fp::span_rank(new_basis, m.space.dimension(), p) != m.basis.size()) {
    throw DomainError("rebase needs a basis of the same dimension");
  }
  ClassModule out;
  out.space = m.space;
  out.basis = new_basis;
  out.generator_rank = m.generator_rank;
  for (const auto& v : new_basis) {
    if (!m.coordinates_of(m.space.class_at(v))) throw DomainError("rebase vector outside module");
    out.classes.push_back(m.space.class_at(v));
  }
  out.presentation.p = p;
  out.presentation.q = m.presentation.q;
  out.presentation.x = new_basis.empty()
                           ? FpMatrix(0, 0, p)
                           : presentation_matrix(m.space.x_matrix(), new_basis, m.space.dimension(), p);
  for (const auto& c : out.classes) {
    out.presentation.basis_labels.push_back(
        ratfunc::to_string(m.space.context().k(), c.representative));
  }
  return out;
}

std::size_t annihilator_exponent(const KummerClass& c, const GaloisContext& ctx) {
  KummerClass cur = c;
  std::size_t s = 0;
  while (!cur.is_trivial()) {
    if (s >= ctx.q) throw InvariantViolation("x^q does not annihilate the class");
    cur = x_action(cur, ctx);
    ++s;
  }
  return s;
}

}  // namespace relkummer
