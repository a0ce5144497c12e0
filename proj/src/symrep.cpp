#include "kzr/symrep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kzr/errors.hpp"

namespace kzr {

namespace {

FieldScalar r(long n, long d = 1) { return FieldScalar(Rational(n, d)); }
FieldScalar s2(long n, long d = 1) { return FieldScalar(0, Rational(n, d), 0, 0); }
FieldScalar s3(long n, long d = 1) { return FieldScalar(0, 0, Rational(n, d), 0); }
FieldScalar s6(long n, long d = 1) { return FieldScalar(0, 0, 0, Rational(n, d)); }

std::string pname(int a, int b) { return "P(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void extend(const std::vector<int>& shape, StandardTableau& current, std::vector<int>& lengths,
            int letter, int n, std::vector<StandardTableau>& out) {
  if (letter > n) {
    out.push_back(current);
    return;
  }
  for (std::size_t row = 0; row < shape.size(); ++row) {
    if (lengths[row] >= shape[row]) continue;
    if (row > 0 && lengths[row - 1] <= lengths[row]) continue;
    current.row[letter - 1] = static_cast<int>(row);
    current.col[letter - 1] = lengths[row];
    ++lengths[row];
    extend(shape, current, lengths, letter + 1, n, out);
    --lengths[row];
  }
}

}  // namespace

Transposition Transposition::of(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("transposition indices are 1-based");
  if (a == b) throw DomainError("transposition needs two distinct indices, got " + std::to_string(a) + " twice");
  return a < b ? Transposition{a, b} : Transposition{b, a};
}

std::string Transposition::key() const { return std::to_string(i) + "," + std::to_string(j); }

Transposition Transposition::parse(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("transposition key must be \"i,j\": '" + key + "'");
  try {
    return of(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("transposition key must be \"i,j\": '" + key + "'");
  }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("partition needs at least one part");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw DomainError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad partition '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) out += (k ? "," : "") + std::to_string(parts_[k]);
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  const int n = shape.size();
  StandardTableau current{std::vector<int>(n), std::vector<int>(n)};
  std::vector<int> lengths(shape.parts().size(), 0);
  std::vector<StandardTableau> out;
  extend(shape.parts(), current, lengths, 1, n, out);
  std::sort(out.begin(), out.end(), [n](const StandardTableau& a, const StandardTableau& b) {
    for (int letter = n; letter >= 1; --letter) {
      if (a.row[letter - 1] != b.row[letter - 1]) return a.row[letter - 1] > b.row[letter - 1];
    }
    return false;
  });
  return out;
}

Representation::Representation(int n, int dim, std::map<Transposition, FieldMatrix> matrices)
    : n_(n), dim_(dim), matrices_(std::move(matrices)) {
  if (n < 2) throw DomainError("representation degree must be at least 2");
  for (const auto& [t, m] : matrices_) {
    if (t.j > n) throw DomainError("transposition " + t.key() + " outside S_" + std::to_string(n));
    if (m.rows() != static_cast<std::size_t>(dim) || m.cols() != static_cast<std::size_t>(dim)) {
      throw ShapeMismatch(pname(t.i, t.j) + " is " + m.shape() + ", expected " + std::to_string(dim) + "x" +
                          std::to_string(dim));
    }
  }
}

bool Representation::complete() const {
  return matrices_.size() == static_cast<std::size_t>(n_ * (n_ - 1) / 2);
}

bool Representation::has(int a, int b) const { return matrices_.count(Transposition::of(a, b)) > 0; }

const FieldMatrix& Representation::at(int a, int b) const {
  const auto it = matrices_.find(Transposition::of(a, b));
  if (it == matrices_.end()) throw MissingMatrix("representation has no matrix for " + pname(a, b));
  return it->second;
}

Representation Representation::with(int a, int b, FieldMatrix m) const {
  auto copy = matrices_;
  copy[Transposition::of(a, b)] = std::move(m);
  return Representation(n_, dim_, std::move(copy));
}

Representation builtin_s4_22() {
  const FieldMatrix diag{{1, 0}, {0, -1}};
  const FieldMatrix minus{{r(-1, 2), s3(-1, 2)}, {s3(-1, 2), r(1, 2)}};
  const FieldMatrix plus{{r(-1, 2), s3(1, 2)}, {s3(1, 2), r(1, 2)}};
  return Representation(4, 2,
                        {{{1, 2}, diag},
                         {{3, 4}, diag},
                         {{1, 3}, minus},
                         {{2, 4}, minus},
                         {{1, 4}, plus},
                         {{2, 3}, plus}});
}

Representation builtin_s5_gen1() {
  const FieldMatrix p12{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}};
  const FieldMatrix p13{{1, 0, 0, 0, 0},
                        {0, r(-1, 2), s3(-1, 2), 0, 0},
                        {0, s3(-1, 2), r(1, 2), 0, 0},
                        {0, 0, 0, r(-1, 2), s3(-1, 2)},
                        {0, 0, 0, s3(-1, 2), r(1, 2)}};
  const FieldMatrix p14{{r(-1, 3), s2(-1, 3), s6(-1, 3), 0, 0},
                        {s2(-1, 3), r(5, 6), s3(-1, 6), 0, 0},
                        {s6(-1, 3), s3(-1, 6), r(1, 2), 0, 0},
                        {0, 0, 0, r(-1, 2), s3(1, 2)},
                        {0, 0, 0, s3(1, 2), r(1, 2)}};
  const FieldMatrix p15{{r(-1, 3), s2(1, 9), s6(1, 9), r(-4, 9), s3(-4, 9)},
                        {s2(1, 9), r(-19, 54), s3(23, 54), s2(-8, 27), s6(4, 27)},
                        {s6(1, 9), s3(23, 54), r(1, 2), s6(4, 27), 0},
                        {r(-4, 9), s2(-8, 27), s6(4, 27), r(37, 54), s3(-5, 54)},
                        {s3(-4, 9), s6(4, 27), 0, s3(-5, 54), r(1, 2)}};
  return Representation(5, 5, {{{1, 2}, p12}, {{1, 3}, p13}, {{1, 4}, p14}, {{1, 5}, p15}});
}

Representation representation_from_selector(const std::string& selector, int n) {
  auto builtin = [&](Representation rep) {
    if (n != 0 && n != rep.n()) throw DomainError(selector + " is a representation of S_" + std::to_string(rep.n()));
    return rep;
  };
  if (selector == "s4-22") return builtin(builtin_s4_22());
  if (selector == "s5-gen1") return builtin(builtin_s5_gen1());
  if (selector.rfind("young:", 0) == 0) {
    const Partition shape = Partition::parse(selector.substr(6));
    return young_orthogonal(shape, n == 0 ? shape.size() : n);
  }
  throw DomainError("unknown representation selector '" + selector + "' (expected s4-22, s5-gen1 or young:<partition>)");
}

Representation young_orthogonal(const Partition& shape, int n) {
  if (shape.size() != n) {
    throw DomainError("partition [" + shape.str() + "] does not partition n = " + std::to_string(n));
  }
  if (n < 2) throw DomainError("Young's orthogonal form needs n >= 2");
  const auto tableaux = standard_tableaux(shape);
  const std::size_t dim = tableaux.size();

  auto index_of = [&](const StandardTableau& t) {
    return static_cast<std::size_t>(std::find(tableaux.begin(), tableaux.end(), t) - tableaux.begin());
  };

  std::map<Transposition, FieldMatrix> matrices;
  for (int i = 1; i < n; ++i) {
    FieldMatrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const StandardTableau& t = tableaux[a];
      const int d = t.content(i + 1) - t.content(i);  // axial distance
      m(a, a) = r(1, d);
      if (d == 1 || d == -1) continue;
      StandardTableau swapped = t;
      std::swap(swapped.row[i - 1], swapped.row[i]);
      std::swap(swapped.col[i - 1], swapped.col[i]);
      const auto off = FieldScalar::sqrt_of(Rational(static_cast<long>(d) * d - 1, static_cast<long>(d) * d));
      if (!off) {
        throw FieldExtensionError("Young's orthogonal form for [" + shape.str() + "] needs sqrt(" +
                                  std::to_string(d * d - 1) + ")/" + std::to_string(d < 0 ? -d : d) +
                                  " (axial distance " + std::to_string(d) + "), outside Q(sqrt2, sqrt3)");
      }
      m(a, index_of(swapped)) = *off;
    }
    matrices.emplace(Transposition{i, i + 1}, std::move(m));
  }
  // (i j) = (j-1 j)(i j-1)(j-1 j)
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 1; i + gap <= n; ++i) {
      const int j = i + gap;
      const FieldMatrix& s = matrices.at(Transposition{j - 1, j});
      matrices.emplace(Transposition{i, j}, s * matrices.at(Transposition{i, j - 1}) * s);
    }
  }
  return Representation(n, static_cast<int>(dim), std::move(matrices));
}

ValidationReport validate_representation(const Representation& rep) {
  ValidationReport report;
  report.subject = "representation of S_" + std::to_string(rep.n()) + " (dim " + std::to_string(rep.dim()) + ")";
  const FieldMatrix id = FieldMatrix::identity(static_cast<std::size_t>(rep.dim()));
  for (const auto& [t, m] : rep.matrices()) {
    report.record(pname(t.i, t.j) + " symmetric", m.is_symmetric());
    report.record(pname(t.i, t.j) + "^2 = I", m * m == id);
  }
  if (rep.partial()) {
    report.notes.push_back("partial: braid checks skipped");
    // two stored transpositions sharing a letter generate a 3-cycle; advisory only
    for (const auto& [a, ma] : rep.matrices()) {
      for (const auto& [b, mb] : rep.matrices()) {
        if (!(a < b)) continue;
        if (a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j) continue;
        const FieldMatrix c = ma * mb;
        if (c * c * c != id) {
          report.notes.push_back("advisory: (" + pname(a.i, a.j) + " " + pname(b.i, b.j) + ")^3 != I");
        }
      }
    }
    return report;
  }
  const int n = rep.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        const FieldMatrix& pij = rep.at(i, j);
        report.record(pname(i, j) + " " + pname(j, k) + " " + pname(i, j) + " = " + pname(i, k),
                      pij * rep.at(j, k) * pij == rep.at(i, k));
      }
    }
  }
  for (const auto& [a, ma] : rep.matrices()) {
    for (const auto& [b, mb] : rep.matrices()) {
      if (!(a < b) || a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) continue;
      report.record(pname(a.i, a.j) + " " + pname(b.i, b.j) + " = " + pname(b.i, b.j) + " " + pname(a.i, a.j),
                    ma * mb == mb * ma);
    }
  }
  return report;
}

void to_json(json& j, const Representation& rep) {
  json matrices = json::object();
  for (const auto& [t, m] : rep.matrices()) matrices[t.key()] = m;
  j = json{{"n", rep.n()}, {"dim", rep.dim()}, {"matrices", std::move(matrices)}};
}

void from_json(const json& j, Representation& rep) {
  std::map<Transposition, FieldMatrix> matrices;
  for (const auto& [key, value] : j.at("matrices").items()) {
    matrices.emplace(Transposition::parse(key), value.get<FieldMatrix>());
  }
  rep = Representation(j.at("n").get<int>(), j.at("dim").get<int>(), std::move(matrices));
}

}  // namespace kzr
