#include "cdga/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cdga/errors.hpp"

namespace cdga {

// ---------------------------------------------------------------- GradedBasis

GradedBasis::GradedBasis(std::vector<std::string> labels, std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
  if (labels_.size() != degrees_.size())
    throw StructureError("basis labels and degrees differ in length");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw StructureError("empty basis label");
    if (degrees_[i] < 0) throw StructureError("negative degree for basis element " + labels_[i]);
    if (i > 0 && degrees_[i] < degrees_[i - 1])
      throw StructureError("basis is not sorted by degree");
    if (!lookup_.emplace(labels_[i], i).second)
      throw StructureError("duplicate basis label " + labels_[i]);
  }
}

std::optional<std::size_t> GradedBasis::find(const std::string& label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedBasis::index_of(const std::string& label) const {
  auto found = find(label);
  if (!found) throw StructureError("unknown basis label \"" + label + "\"");
  return *found;
}

std::vector<std::size_t> GradedBasis::in_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == degree) out.push_back(i);
  return out;
}

int GradedBasis::max_degree() const {
  return degrees_.empty() ? -1 : *std::max_element(degrees_.begin(), degrees_.end());
}

// ------------------------------------------------------------------ DGAlgebra

SparseVec DGAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
  if (i <= j) {
    auto it = products_.find({i, j});
    return it == products_.end() ? SparseVec{} : it->second;
  }
  auto it = products_.find({j, i});
  if (it == products_.end()) return {};
  return scaled(it->second, koszul(static_cast<long long>(degree(i)) * degree(j)));
}

SparseVec DGAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_scaled(out, a * b, multiply_basis(i, j));
  return out;
}

SparseVec DGAlgebra::apply_d(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, a] : x) add_scaled(out, a, differential_.at(i));
  return out;
}

SparseMatrix DGAlgebra::differential_matrix() const {
  std::vector<SparseMatrix::Entry> entries;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [i, c] : differential_[j]) entries.push_back({i, j, c});
  return SparseMatrix(dim(), dim(), std::move(entries));
}

GradedComplex DGAlgebra::complex() const {
  return GradedComplex{basis_.degrees(), differential_, basis_.labels()};
}

// ------------------------------------------------------------- AlgebraBuilder

AlgebraBuilder::AlgebraBuilder(std::string name, Order order)
    : name_(std::move(name)), order_(order) {}

AlgebraBuilder AlgebraBuilder::from(const DGAlgebra& algebra) {
  AlgebraBuilder b(algebra.name());
  for (std::size_t i = 0; i < algebra.dim(); ++i) b.add_basis(algebra.label(i), algebra.degree(i));
  b.unit_ = algebra.unit();
  b.top_degree_ = algebra.top_degree();
  b.simply_connected_ = algebra.declared_simply_connected();
  b.products_ = algebra.stored_products();
  b.conflicts_ = algebra.commutativity_conflicts();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (!algebra.d(i).empty()) b.differential_[i] = algebra.d(i);
  return b;
}

std::size_t AlgebraBuilder::add_basis(std::string label, int degree) {
  if (lookup_.count(label)) throw StructureError("duplicate basis label " + label);
  lookup_.emplace(label, labels_.size());
  labels_.push_back(std::move(label));
  degrees_.push_back(degree);
  return labels_.size() - 1;
}

std::size_t AlgebraBuilder::slot(const std::string& label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) throw StructureError("unknown basis label \"" + label + "\"");
  return it->second;
}

void AlgebraBuilder::set_unit(std::size_t slot) {
  if (slot >= labels_.size()) throw StructureError("unit slot out of range");
  unit_ = slot;
}

namespace {
void drop_zeros(SparseVec& v) {
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
}
}  // namespace

void AlgebraBuilder::set_product(std::size_t left, std::size_t right, SparseVec value) {
  if (left >= labels_.size() || right >= labels_.size())
    throw StructureError("product slot out of range");
  drop_zeros(value);
  std::pair key{left, right};
  if (left > right) {
    key = {right, left};
    value = scaled(value, koszul(static_cast<long long>(degrees_[left]) * degrees_[right]));
  }
  auto [it, inserted] = products_.try_emplace(key, std::move(value));
  if (!inserted && it->second != value) conflicts_.emplace_back(left, right);
}

void AlgebraBuilder::override_product(std::size_t left, std::size_t right, SparseVec value) {
  if (left >= labels_.size() || right >= labels_.size())
    throw StructureError("product slot out of range");
  drop_zeros(value);
  if (left > right) {
    value = scaled(value, koszul(static_cast<long long>(degrees_[left]) * degrees_[right]));
    std::swap(left, right);
  }
  products_[{left, right}] = std::move(value);
}

void AlgebraBuilder::set_differential(std::size_t from, SparseVec value) {
  if (from >= labels_.size()) throw StructureError("differential slot out of range");
  drop_zeros(value);
  differential_[from] = std::move(value);
}

AlgebraPtr AlgebraBuilder::build() {
  const std::size_t n = labels_.size();
  if (n == 0) throw StructureError("algebra \"" + name_ + "\" has an empty basis");
  if (!unit_) throw StructureError("algebra \"" + name_ + "\" has no unit");
  if (degrees_[*unit_] != 0) throw StructureError("unit must have degree 0");
  for (std::size_t s = 0; s < n; ++s) {
    if (degrees_[s] < 0) throw StructureError("negative degree for " + labels_[s]);
    if (top_degree_ && degrees_[s] > *top_degree_)
      throw StructureError("basis element " + labels_[s] + " lies above the formal dimension");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
    if (order_ == Order::Label) return labels_[a] < labels_[b];
    return false;
  });
  slot_to_index_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) slot_to_index_[order[i]] = i;

  auto remap = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [s, c] : v) {
      if (s >= n) throw StructureError("structure constant refers to an unknown slot");
      out.emplace(slot_to_index_[s], c);
    }
    return out;
  };

  auto algebra = std::shared_ptr<DGAlgebra>(new DGAlgebra());
  algebra->name_ = name_;
  std::vector<std::string> labels(n);
  std::vector<int> degrees(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = labels_[order[i]];
    degrees[i] = degrees_[order[i]];
  }
  algebra->basis_ = GradedBasis(std::move(labels), std::move(degrees));
  algebra->unit_ = slot_to_index_[*unit_];
  algebra->top_degree_ = top_degree_;
  algebra->simply_connected_ = simply_connected_;

  auto products = products_;
  for (std::size_t s = 0; s < n; ++s) {
    std::pair key{std::min(*unit_, s), std::max(*unit_, s)};
    if (!products.count(key)) products[key] = SparseVec{{s, Scalar(1)}};
  }
  for (const auto& [key, value] : products) {
    auto [a, b] = key;
    SparseVec v = remap(value);
    for (const auto& [k, c] : v) {
      (void)c;
      if (algebra->basis_.degree(k) != degrees_[a] + degrees_[b])
        throw StructureError("product " + labels_[a] + "·" + labels_[b] +
                             " does not preserve degree");
    }
    std::size_t i = slot_to_index_[a], j = slot_to_index_[b];
    if (i > j) {
      v = scaled(v, koszul(static_cast<long long>(degrees_[a]) * degrees_[b]));
      std::swap(i, j);
    }
    if (!v.empty()) algebra->products_[{i, j}] = std::move(v);
  }

  algebra->differential_.assign(n, SparseVec{});
  for (const auto& [s, value] : differential_) {
    SparseVec v = remap(value);
    for (const auto& [k, c] : v) {
      (void)c;
      if (algebra->basis_.degree(k) != degrees_[s] + 1)
        throw StructureError("differential of " + labels_[s] + " does not raise degree by 1");
    }
    algebra->differential_[slot_to_index_[s]] = std::move(v);
  }
  for (auto [a, b] : conflicts_) algebra->conflicts_.emplace_back(slot_to_index_[a], slot_to_index_[b]);
  return algebra;
}

// -------------------------------------------------------------------- Element

Element::Element(AlgebraPtr algebra, SparseVec coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw std::invalid_argument("element without algebra");
  drop_zeros(coeffs_);
  for (const auto& [i, c] : coeffs_) {
    (void)c;
    if (i >= algebra_->dim()) throw std::out_of_range("element coordinate out of range");
  }
}

Element Element::zero(AlgebraPtr algebra) { return Element(std::move(algebra), {}); }

Element Element::basis(AlgebraPtr algebra, std::size_t index) {
  return Element(std::move(algebra), SparseVec{{index, Scalar(1)}});
}

Element Element::basis(AlgebraPtr algebra, const std::string& label) {
  std::size_t index = algebra->index_of(label);
  return basis(std::move(algebra), index);
}

Scalar Element::coeff(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

std::optional<int> Element::degree() const {
  std::optional<int> deg;
  for (const auto& [i, c] : coeffs_) {
    (void)c;
    int d = algebra_->degree(i);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

void Element::require_same_parent(const Element& other) const {
  if (algebra_ != other.algebra_) throw MixedParents();
}

Element Element::operator+(const Element& other) const {
  require_same_parent(other);
  SparseVec v = coeffs_;
  add_scaled(v, 1, other.coeffs_);
  return Element(algebra_, std::move(v));
}

Element Element::operator-(const Element& other) const {
  require_same_parent(other);
  SparseVec v = coeffs_;
  add_scaled(v, -1, other.coeffs_);
  return Element(algebra_, std::move(v));
}

Element Element::operator-() const { return Element(algebra_, scaled(coeffs_, -1)); }

Element Element::operator*(const Element& other) const {
  require_same_parent(other);
  return Element(algebra_, algebra_->multiply(coeffs_, other.coeffs_));
}

Element Element::operator*(const Scalar& factor) const {
  return Element(algebra_, scaled(coeffs_, factor));
}

Element Element::d() const { return Element(algebra_, algebra_->apply_d(coeffs_)); }

bool Element::operator==(const Element& other) const {
  return algebra_ == other.algebra_ && coeffs_ == other.coeffs_;
}

// ----------------------------------------------------------------- check_cdga

bool AxiomReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::get(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return r;
  throw std::out_of_range("no axiom named " + axiom);
}

namespace {

void fail_once(AxiomResult& r, std::vector<std::size_t> witness, std::string detail) {
  if (!r.passed) return;
  r.passed = false;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
}

std::string tuple_text(const DGAlgebra& a, const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ", ";
    s += a.label(idx[k]);
  }
  return s + ")";
}

}  // namespace

AxiomReport check_cdga(const DGAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = a.multiply_basis(i, j);

  AxiomReport report;

  AxiomResult unit;
  unit.axiom = "unit";
  for (std::size_t i = 0; i < n; ++i) {
    ++unit.checked;
    SparseVec expect{{i, Scalar(1)}};
    if (table[a.unit()][i] != expect || table[i][a.unit()] != expect)
      fail_once(unit, {i}, "1·" + a.label(i) + " ≠ " + a.label(i));
  }
  report.results.push_back(unit);

  AxiomResult assoc;
  assoc.axiom = "associativity";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++assoc.checked;
        if (!assoc.passed) continue;
        SparseVec left, right;
        for (const auto& [l, c] : table[i][j]) add_scaled(left, c, table[l][k]);
        for (const auto& [l, c] : table[j][k]) add_scaled(right, c, table[i][l]);
        if (left != right) fail_once(assoc, {i, j, k}, "(ab)c ≠ a(bc) at " + tuple_text(a, {i, j, k}));
      }
  report.results.push_back(assoc);

  AxiomResult comm;
  comm.axiom = "commutativity";
  for (auto [i, j] : a.commutativity_conflicts())
    fail_once(comm, {i, j}, "conflicting products given for " + tuple_text(a, {i, j}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ++comm.checked;
      SparseVec swapped = scaled(table[j][i], koszul(static_cast<long long>(a.degree(i)) * a.degree(j)));
      if (table[i][j] != swapped)
        fail_once(comm, {i, j}, "ab ≠ (-1)^{|a||b|} ba at " + tuple_text(a, {i, j}));
    }
  report.results.push_back(comm);

  AxiomResult dsq;
  dsq.axiom = "d_squared";
  for (std::size_t i = 0; i < n; ++i) {
    ++dsq.checked;
    if (!a.apply_d(a.d(i)).empty()) fail_once(dsq, {i}, "d²(" + a.label(i) + ") ≠ 0");
  }
  report.results.push_back(dsq);

  AxiomResult leibniz;
  leibniz.axiom = "leibniz";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++leibniz.checked;
      if (!leibniz.passed) continue;
      SparseVec lhs = a.apply_d(table[i][j]);
      SparseVec rhs = a.multiply(a.d(i), SparseVec{{j, Scalar(1)}});
      add_scaled(rhs, koszul(a.degree(i)), a.multiply(SparseVec{{i, Scalar(1)}}, a.d(j)));
      if (lhs != rhs) fail_once(leibniz, {i, j}, "Leibniz rule fails at " + tuple_text(a, {i, j}));
    }
  report.results.push_back(leibniz);

  if (a.declared_simply_connected()) {
    AxiomResult conn;
    conn.axiom = "simply_connected";
    for (std::size_t i = 0; i < n; ++i) {
      ++conn.checked;
      if ((a.degree(i) == 0 && i != a.unit()) || a.degree(i) == 1)
        fail_once(conn, {i}, "basis element " + a.label(i) + " violates A⁰ = ℚ, A¹ = 0");
    }
    report.results.push_back(conn);
  }
  return report;
}

// --------------------------------------------------------------- BasisChange

namespace {
SparseVec apply_rows_transposed(const std::vector<Vector>& m, const SparseVec& x) {
  // y_j = Σ_i x_i m[i][j]
  SparseVec y;
  for (const auto& [i, c] : x)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0) add_scaled(y, c * m[i][j], SparseVec{{j, Scalar(1)}});
  return y;
}
}  // namespace

SparseVec BasisChange::to_new(const SparseVec& old_coords) const {
  return apply_rows_transposed(inverse, old_coords);
}

SparseVec BasisChange::to_old(const SparseVec& new_coords) const {
  return apply_rows_transposed(rows, new_coords);
}

BasisChange change_basis(const DGAlgebra& algebra, const std::vector<Vector>& rows,
                         const std::vector<std::string>& new_labels) {
  const std::size_t n = algebra.dim();
  if (rows.size() != n || new_labels.size() != n)
    throw StructureError("change of basis has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw StructureError("change of basis is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i][j] != 0 && algebra.degree(i) != algebra.degree(j))
        throw StructureError("change of basis mixes degrees");
  }
  auto inverse = invert(rows);
  if (!inverse) throw StructureError("change of basis is singular");

  BasisChange change;
  change.rows = rows;
  change.inverse = *inverse;

  SparseVec unit_new = change.to_new(SparseVec{{algebra.unit(), Scalar(1)}});
  if (unit_new.size() != 1 || unit_new.begin()->second != 1)
    throw StructureError("change of basis must send the unit to a basis element");

  AlgebraBuilder b(algebra.name());
  for (std::size_t i = 0; i < n; ++i) b.add_basis(new_labels[i], algebra.degree(i));
  b.set_unit(unit_new.begin()->first);
  if (algebra.top_degree()) b.set_top_degree(*algebra.top_degree());
  b.set_simply_connected(algebra.declared_simply_connected());
  std::vector<SparseVec> old_of_new(n);
  for (std::size_t i = 0; i < n; ++i) old_of_new[i] = to_sparse(rows[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j)
      b.set_product(i, j, change.to_new(algebra.multiply(old_of_new[i], old_of_new[j])));
    b.set_differential(i, change.to_new(algebra.apply_d(old_of_new[i])));
  }
  change.algebra = b.build();
  return change;
}

bool isomorphic_by_labels(const DGAlgebra& a, const DGAlgebra& b,
                          const std::map<std::string, std::string>& a_to_b) {
  if (a.dim() != b.dim()) return false;
  std::vector<std::size_t> image(a.dim());
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto it = a_to_b.find(a.label(i));
    if (it == a_to_b.end()) return false;
    auto j = b.basis().find(it->second);
    if (!j || b.degree(*j) != a.degree(i) || !used.insert(*j).second) return false;
    image[i] = *j;
  }
  if (image[a.unit()] != b.unit()) return false;
  auto map_vec = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v) out.emplace(image[i], c);
    return out;
  };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (map_vec(a.d(i)) != b.d(image[i])) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (map_vec(a.multiply_basis(i, j)) != b.multiply_basis(image[i], image[j])) return false;
  }
  return true;
}

AlgebraPtr relabel(const DGAlgebra& algebra, const std::vector<std::string>& labels,
                   const std::string& name) {
  if (labels.size() != algebra.dim()) throw StructureError("relabel: wrong number of labels");
  AlgebraBuilder b(name);
  for (std::size_t i = 0; i < algebra.dim(); ++i) b.add_basis(labels[i], algebra.degree(i));
  b.set_unit(algebra.unit());
  if (algebra.top_degree()) b.set_top_degree(*algebra.top_degree());
  b.set_simply_connected(algebra.declared_simply_connected());
  for (const auto& [key, value] : algebra.stored_products()) b.override_product(key.first, key.second, value);
  for (std::size_t i = 0; i < algebra.dim(); ++i) b.set_differential(i, algebra.d(i));
  return b.build();
}

MapCheck check_cdga_map(const DGAlgebra& src, const DGAlgebra& dst, const std::vector<SparseVec>& images) {
  MapCheck c;
  auto fail = [&](std::string detail) {
    if (c.ok) {
      c.ok = false;
      c.detail = std::move(detail);
    }
  };
  if (images.size() != src.dim()) {
    fail("map has the wrong number of images");
    return c;
  }
  auto apply = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, x] : v) add_scaled(out, x, images[i]);
    return out;
  };
  if (images[src.unit()] != SparseVec{{dst.unit(), Scalar(1)}}) fail("unit is not preserved");
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (const auto& [k, x] : images[i]) {
      (void)x;
      if (k >= dst.dim() || dst.degree(k) != src.degree(i)) fail("image of " + src.label(i) + " has the wrong degree");
    }
    if (apply(src.d(i)) != dst.apply_d(images[i])) fail("map does not commute with d on " + src.label(i));
    for (std::size_t j = 0; j < src.dim(); ++j)
      if (apply(src.multiply_basis(i, j)) != dst.multiply(images[i], images[j]))
        fail("map is not multiplicative on (" + src.label(i) + ", " + src.label(j) + ")");
  }
  return c;
}

}  // namespace cdga
