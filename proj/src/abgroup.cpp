#include "stacky/abgroup.hpp"

#include "stacky/exactlinalg.hpp"

#include <stdexcept>

namespace stacky {

const Integer& GroupOrder::value() const {
  if (!value_) throw std::logic_error("GroupOrder: group is infinite");
  return *value_;
}

std::string GroupOrder::to_string() const { return value_ ? value_->get_str() : "infinite"; }

FgAbGroup::FgAbGroup(std::size_t rank, std::vector<Integer> torsion) : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("FgAbGroup: torsion factors must be >= 2");
    if (i > 0 && mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()) == 0)
      throw std::invalid_argument("FgAbGroup: torsion factors must form a divisibility chain");
  }
}

GroupOrder FgAbGroup::order() const {
  if (rank_ > 0) return GroupOrder::infinite();
  Integer n = 1;
  for (const auto& q : torsion_) n *= q;
  return GroupOrder(n);
}

IntMatrix FgAbGroup::relation_matrix() const {
  IntMatrix r(dim(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) r(rank_ + i, i) = torsion_[i];
  return r;
}

IntVector FgAbGroup::reduce(IntVector coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("FgAbGroup: coordinate vector has wrong length");
  for (std::size_t i = 0; i < torsion_.size(); ++i) coords[rank_ + i] = mod_floor(coords[rank_ + i], torsion_[i]);
  return coords;
}

IntMatrix FgAbGroup::reduce_columns(IntMatrix m) const {
  if (m.rows() != dim()) throw std::invalid_argument("FgAbGroup: matrix has wrong row count");
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank_ + i, j) = mod_floor(m(rank_ + i, j), torsion_[i]);
  return m;
}

bool FgAbGroup::is_zero(const IntVector& coords) const {
  IntVector r = reduce(coords);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

std::string FgAbGroup::to_string() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (rank_ == 1) append("Z");
  if (rank_ > 1) append("Z^" + std::to_string(rank_));
  for (const auto& q : torsion_) append("Z/" + q.get_str());
  return out.empty() ? "0" : out;
}

GroupElement::GroupElement(FgAbGroup parent, IntVector coords)
    : parent_(std::move(parent)), coords_(parent_.reduce(std::move(coords))) {}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
  if (matrix.rows() != target_.dim() || matrix.cols() != source_.dim())
    throw std::invalid_argument("GroupHom: matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + ", expected " + std::to_string(target_.dim()) +
                                "x" + std::to_string(source_.dim()));
  for (std::size_t i = 0; i < source_.torsion().size(); ++i) {
    const std::size_t col = source_.rank() + i;
    IntVector image = matrix.column(col);
    for (auto& x : image) x *= source_.torsion()[i];
    if (!target_.is_zero(image))
      throw std::invalid_argument("GroupHom: not well defined on torsion generator " + std::to_string(col));
  }
  matrix_ = target_.reduce_columns(std::move(matrix));
}

IntVector GroupHom::apply(const IntVector& coords) const {
  if (coords.size() != source_.dim()) throw std::invalid_argument("GroupHom: argument has wrong length");
  return target_.reduce(matrix_ * coords);
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (!(x.parent() == source_)) throw std::invalid_argument("GroupHom: element not in source group");
  return GroupElement(target_, apply(x.coords()));
}

Subgroup::Subgroup(FgAbGroup parent, IntMatrix generators) : parent_(std::move(parent)) {
  if (generators.cols() == 0) generators = IntMatrix(parent_.dim(), 0);
  generators_ = parent_.reduce_columns(std::move(generators));
}

Subgroup Subgroup::trivial(const FgAbGroup& g) { return Subgroup(g, IntMatrix(g.dim(), 0)); }

Subgroup Subgroup::whole(const FgAbGroup& g) { return Subgroup(g, IntMatrix::identity(g.dim())); }

bool Subgroup::contains(const IntVector& coords) const {
  return solve_integer(hstack(generators_, parent_.relation_matrix()), coords).has_value();
}

bool Subgroup::contains(const Subgroup& other) const {
  if (!(other.parent_ == parent_)) throw std::invalid_argument("Subgroup: different parent groups");
  for (std::size_t j = 0; j < other.generators_.cols(); ++j)
    if (!contains(other.generators_.column(j))) return false;
  return true;
}

IntMatrix Subgroup::lifted_lattice() const { return lattice_basis(hstack(generators_, parent_.relation_matrix())); }

Quotient from_presentation(std::size_t generators, const IntMatrix& relations) {
  IntMatrix rel = relations.cols() == 0 ? IntMatrix(generators, 0) : relations;
  if (rel.rows() != generators) throw std::invalid_argument("from_presentation: relation matrix has wrong row count");

  SmithDecomposition sd = smith_normal_form(rel);
  IntVector diag = sd.diagonal();
  diag.resize(generators, 0);

  std::vector<std::size_t> free_rows;
  std::vector<std::size_t> torsion_rows;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < generators; ++i) {
    if (diag[i] == 0) {
      free_rows.push_back(i);
    } else if (diag[i] != 1) {
      torsion_rows.push_back(i);
      torsion.push_back(diag[i]);
    }
  }
  std::vector<std::size_t> kept = free_rows;
  kept.insert(kept.end(), torsion_rows.begin(), torsion_rows.end());

  FgAbGroup group(free_rows.size(), std::move(torsion));
  IntMatrix u_inv = *integer_inverse(sd.U);
  GroupHom projection(FgAbGroup::free(generators), group, sd.U.select_rows(kept));
  return Quotient{group, projection, u_inv.select_columns(kept)};
}

namespace {

Quotient quotient_of(const FgAbGroup& g, const IntMatrix& killed) {
  Quotient q = from_presentation(g.dim(), hstack(killed, g.relation_matrix()));
  GroupHom projection(g, q.group, q.projection.matrix());
  return Quotient{q.group, projection, q.section};
}

}  // namespace

Quotient cokernel(const GroupHom& f) { return quotient_of(f.target(), f.matrix()); }

Quotient quotient_by(const Subgroup& h) { return quotient_of(h.parent(), h.generators()); }

Embedding torsion_subgroup(const FgAbGroup& g) {
  FgAbGroup t(0, g.torsion());
  IntMatrix incl(g.dim(), t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) incl(g.rank() + i, i) = 1;
  return Embedding{t, GroupHom(t, g, incl)};
}

Embedding structure(const Subgroup& h) {
  const IntMatrix& gens = h.generators();
  const std::size_t k = gens.cols();
  // x in Z^k maps to zero iff gens * x lies in the parent's relation lattice.
  IntMatrix kernel_lattice = integer_kernel(hstack(gens, h.parent().relation_matrix())).row_block(0, k);
  Quotient q = from_presentation(k, kernel_lattice);
  return Embedding{q.group, GroupHom(q.group, h.parent(), gens * q.section)};
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) { return a.contains(b) && b.contains(a); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: homomorphisms are not composable");
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupHom restrict_to(const GroupHom& f, const Subgroup& h) {
  if (!(h.parent() == f.source())) throw std::invalid_argument("restrict_to: subgroup not in source");
  return compose(f, structure(h).inclusion);
}

Subgroup kernel(const GroupHom& f) {
  const std::size_t a = f.source().dim();
  IntMatrix k = integer_kernel(hstack(f.matrix(), f.target().relation_matrix())).row_block(0, a);
  return Subgroup(f.source(), k);
}

Subgroup image(const GroupHom& f) { return Subgroup(f.target(), f.matrix()); }

bool is_injective(const GroupHom& f) {
  const Subgroup k = kernel(f);
  for (std::size_t j = 0; j < k.generators().cols(); ++j)
    if (!f.source().is_zero(k.generators().column(j))) return false;
  return true;
}

bool is_surjective(const GroupHom& f) { return cokernel(f).group.is_trivial(); }

GroupOrder order(const FgAbGroup& g) { return g.order(); }

GroupOrder order(const Subgroup& h) { return structure(h).group.order(); }

}  // namespace stacky
