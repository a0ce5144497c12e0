#include <doctest.h>

#include "kzr/errors.hpp"
#include "kzr/symrep.hpp"

using namespace kzr;

namespace {

FieldScalar r(long n, long d = 1) { return FieldScalar(Rational(n, d)); }
FieldScalar s3(long n, long d = 1) { return FieldScalar(0, 0, Rational(n, d), 0); }

}  // namespace

TEST_CASE("builtin S4 representation") {
  const Representation rep = builtin_s4_22();
  CHECK(rep.complete());
  CHECK(rep.at(1, 2) == FieldMatrix{{1, 0}, {0, -1}});
  CHECK(rep.at(2, 3) == FieldMatrix{{r(-1, 2), s3(1, 2)}, {s3(1, 2), r(1, 2)}});
  CHECK(rep.at(3, 2) == rep.at(2, 3));
  for (const auto& [t, m] : rep.matrices()) CHECK(m.trace() == r(0));
  CHECK(validate_representation(rep).passed());
}

TEST_CASE("builtin S5 row-one data") {
  const Representation rep = builtin_s5_gen1();
  CHECK(rep.partial());
  CHECK(rep.matrices().size() == 4);
  CHECK(rep.at(1, 2) == FieldMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}});
  CHECK(rep.at(1, 5)(0, 4) == s3(-4, 9));
  for (const auto& [t, m] : rep.matrices()) CHECK(m.trace() == r(1));
  CHECK_THROWS_AS(rep.at(2, 3), MissingMatrix);

  const ValidationReport report = validate_representation(rep);
  CHECK(report.passed());
  REQUIRE(report.notes.size() == 2);
  CHECK(report.notes[0] == "partial: braid checks skipped");
  // the stored P(1,4), P(1,5) do not generate a 3-cycle
  CHECK(report.notes[1] == "advisory: (P(1,4) P(1,5))^3 != I");

  // row data cut from a genuine representation raises no advisory
  const Representation young = young_orthogonal(Partition({3, 2}), 5);
  std::map<Transposition, FieldMatrix> row;
  for (int k = 2; k <= 5; ++k) row.emplace(Transposition::of(1, k), young.at(1, k));
  const ValidationReport clean = validate_representation(Representation(5, young.dim(), row));
  CHECK(clean.passed());
  CHECK(clean.notes == std::vector<std::string>{"partial: braid checks skipped"});
}

TEST_CASE("standard tableaux counts follow the hook-length formula") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(standard_tableaux(Partition({n - 1, 1})).size() == static_cast<std::size_t>(n - 1));
  }
  CHECK(standard_tableaux(Partition({2, 2})).size() == 2);
  CHECK(standard_tableaux(Partition({3, 2})).size() == 5);
  CHECK(standard_tableaux(Partition({3, 2, 1})).size() == 16);
  CHECK(standard_tableaux(Partition({1, 1, 1})).size() == 1);
}

TEST_CASE("last-letter order of standard tableaux") {
  const auto t = standard_tableaux(Partition({2, 1}));
  REQUIRE(t.size() == 2);
  // [[1,2],[3]] before [[1,3],[2]]
  CHECK(t[0].row == std::vector<int>{0, 0, 1});
  CHECK(t[1].row == std::vector<int>{0, 1, 0});
}

TEST_CASE("Young's orthogonal form for [2,1]") {
  const Representation rep = young_orthogonal(Partition({2, 1}), 3);
  CHECK(rep.dim() == 2);
  CHECK(rep.at(1, 2) == FieldMatrix{{1, 0}, {0, -1}});
  CHECK(rep.at(2, 3) == FieldMatrix{{r(-1, 2), s3(1, 2)}, {s3(1, 2), r(1, 2)}});
  CHECK(validate_representation(rep).passed());
}

TEST_CASE("Young's orthogonal form for [2,2] shares the character of the builtin") {
  const Representation young = young_orthogonal(Partition({2, 2}), 4);
  const Representation builtin = builtin_s4_22();
  CHECK(young.dim() == 2);
  for (const auto& [t, m] : young.matrices()) {
    CHECK(m.trace() == r(0));
    CHECK(m.determinant() == r(-1));
  }
  CHECK(validate_representation(young).passed());
  // transposition, double transposition, 3-cycle, 4-cycle classes
  auto character = [](const Representation& rep) {
    return std::vector<FieldScalar>{rep.at(1, 2).trace(), (rep.at(1, 2) * rep.at(3, 4)).trace(),
                                    (rep.at(1, 2) * rep.at(2, 3)).trace(),
                                    (rep.at(1, 2) * rep.at(2, 3) * rep.at(3, 4)).trace()};
  };
  CHECK(character(young) == character(builtin));
  CHECK(character(young) == std::vector<FieldScalar>{0, 2, -1, 0});
}

TEST_CASE("Young's orthogonal form for larger shapes") {
  for (const auto& [parts, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{3, 1}, 4}, {{2, 1, 1}, 4}, {{3, 2}, 5}, {{2, 2, 1}, 5}, {{1, 1, 1}, 3}, {{3}, 3}}) {
    CAPTURE(n);
    const Representation rep = young_orthogonal(Partition(parts), n);
    CHECK(rep.complete());
    CHECK(static_cast<std::size_t>(rep.dim()) == standard_tableaux(Partition(parts)).size());
    const ValidationReport report = validate_representation(rep);
    CHECK(report.passed());
    CHECK(report.violations().empty());
  }
}

TEST_CASE("Young's orthogonal form errors") {
  CHECK_THROWS_AS(young_orthogonal(Partition({4, 1}), 5), FieldExtensionError);
  CHECK_THROWS_AS(young_orthogonal(Partition({2, 1}), 4), DomainError);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
  CHECK(Partition::parse("3,1").parts() == std::vector<int>{3, 1});
}

TEST_CASE("validation flags a corrupted involution") {
  FieldMatrix broken = builtin_s4_22().at(1, 2);
  broken(0, 0) = 2;
  const Representation rep = builtin_s4_22().with(1, 2, broken);
  const ValidationReport report = validate_representation(rep);
  CHECK_FALSE(report.passed());
  const auto v = report.violations();
  CHECK(std::find(v.begin(), v.end(), "P(1,2)^2 = I") != v.end());
  CHECK(std::find(v.begin(), v.end(), "P(1,3)^2 = I") == v.end());
}

TEST_CASE("representation json round trip") {
  for (const Representation& rep : {builtin_s4_22(), builtin_s5_gen1(), young_orthogonal(Partition({3, 2}), 5)}) {
    const json j = rep;
    const Representation back = j.get<Representation>();
    CHECK(back == rep);
    CHECK(json(back).dump() == j.dump());
  }
  const json j = builtin_s4_22();
  CHECK(j.at("n") == 4);
  CHECK(j.at("dim") == 2);
  CHECK(j.at("matrices").contains("1,2"));
  CHECK_THROWS_AS(Transposition::parse("1;2"), ParseError);
}

TEST_CASE("representation selectors") {
  CHECK(representation_from_selector("s4-22") == builtin_s4_22());
  CHECK(representation_from_selector("s4-22", 4) == builtin_s4_22());
  CHECK(representation_from_selector("s5-gen1") == builtin_s5_gen1());
  CHECK(representation_from_selector("young:3,1") == young_orthogonal(Partition({3, 1}), 4));
  CHECK(representation_from_selector("young:2,1", 3) == young_orthogonal(Partition({2, 1}), 3));
  CHECK_THROWS_AS(representation_from_selector("s4-22", 5), DomainError);
  CHECK_THROWS_AS(representation_from_selector("young:2,1", 4), DomainError);
  CHECK_THROWS_AS(representation_from_selector("young:"), Error);
  CHECK_THROWS_AS(representation_from_selector("S4"), DomainError);
}
