#include "sexagesimal/tables.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "golden_data.hpp"
#include "oracles.hpp"

namespace {

using sexagesimal::FamilySpec;
using sexagesimal::FamilyTable;
using sexagesimal::Number;

TEST(StandardFamilies, CatalogShape) {
  const auto specs = sexagesimal::standard_families();
  ASSERT_EQ(specs.size(), 23u);

  int doubling_by_powers_of_3 = 0;
  int doubling_by_powers_of_5 = 0;
  int tripling = 0;
  for (const auto& spec : specs) {
    EXPECT_TRUE(spec.well_formed()) << spec.id();
    EXPECT_TRUE(spec.in_standard_catalog()) << spec.id();
    EXPECT_EQ(spec.n_max, 30);
    if (spec.generator == 2) {
      (spec.multiplier_base == 5 ? doubling_by_powers_of_5 : doubling_by_powers_of_3)++;
    } else {
      tripling++;
    }
  }
  EXPECT_EQ(doubling_by_powers_of_3, 9);   // multiplier 3^j, j = 0..8
  EXPECT_EQ(doubling_by_powers_of_5, 12);  // multiplier 5^j, j = 1..12
  EXPECT_EQ(tripling, 2);                  // 3^n and 3^n*5

  EXPECT_NE(std::find(specs.begin(), specs.end(), FamilySpec{2, 5, 3, 30}),
            specs.end());
  EXPECT_NE(std::find(specs.begin(), specs.end(), FamilySpec{3, 5, 1, 30}),
            specs.end());
}

TEST(StandardFamilies, Identifiers) {
  EXPECT_EQ((FamilySpec{2, 1, 0, 30}).id(), "2^n");
  EXPECT_EQ((FamilySpec{2, 3, 1, 30}).id(), "2^n*3");
  EXPECT_EQ((FamilySpec{2, 3, 2, 30}).id(), "2^n*3^2");
  EXPECT_EQ((FamilySpec{2, 5, 12, 30}).id(), "2^n*5^12");
  EXPECT_EQ((FamilySpec{3, 1, 0, 30}).id(), "3^n");
  EXPECT_EQ((FamilySpec{3, 5, 1, 30}).id(), "3^n*5");
}

TEST(GenerateFamily, FirstRowOfTheDoublingFamily) {
  const FamilyTable table = sexagesimal::generate_family(FamilySpec{2, 5, 3, 30});
  ASSERT_EQ(table.rows.size(), 30u);
  EXPECT_EQ(sexagesimal::format(table.rows[0].head), "4,10");
  EXPECT_EQ(sexagesimal::format(table.rows[0].tail), "0;0,14,24");
  ASSERT_TRUE(table.rows[0].provenance.has_value());
  EXPECT_EQ(table.rows[0].provenance->family, "2^n*5^3");
  EXPECT_EQ(table.rows[0].provenance->step, 1);
}

TEST(GenerateFamily, SingleTriplingRow) {
  const FamilyTable table = sexagesimal::generate_family(FamilySpec{3, 1, 0, 1});
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(sexagesimal::format(table.rows[0].head), "3");
  EXPECT_EQ(sexagesimal::format(table.rows[0].tail), "0;20");
}

TEST(GenerateFamily, ChainPropertyLinksAdjacentRows) {
  for (const auto& spec :
       {FamilySpec{2, 3, 4, 12}, FamilySpec{3, 5, 1, 12}, FamilySpec{2, 5, 7, 12}}) {
    const FamilyTable table = sexagesimal::generate_family(spec);
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      EXPECT_EQ(table.rows[i].head,
                sexagesimal::scale_small(table.rows[i - 1].head, spec.generator));
      EXPECT_EQ(table.rows[i].tail,
                sexagesimal::divide_small(table.rows[i - 1].tail, spec.generator));
    }
  }
}

TEST(GenerateFamily, EveryRowVerifies) {
  const FamilyTable table = sexagesimal::generate_family(FamilySpec{3, 5, 1, 30});
  for (const auto& row : table.rows) {
    EXPECT_TRUE(sexagesimal::verify_pair(row)) << sexagesimal::format(row.head);
  }
}

TEST(GenerateFamily, ChainAgreesWithClosedFormForAll690Rows) {
  // Chain-built heads equal multiplier * generator^n computed independently;
  // chain-built tails equal the exponent-based reciprocal of the head.
  std::size_t rows = 0;
  for (const auto& spec : sexagesimal::standard_families()) {
    const FamilyTable table = sexagesimal::generate_family(spec);
    oracles::BigInt head_value = spec.multiplier();
    for (const auto& row : table.rows) {
      head_value *= spec.generator;
      const auto value = oracles::value_of(row.head);
      ASSERT_EQ(value.den, 1);
      ASSERT_EQ(value.num, head_value) << spec.id();
      ASSERT_EQ(row.tail, sexagesimal::reciprocal(row.head)) << spec.id();
      ++rows;
    }
  }
  EXPECT_EQ(rows, 690u);
}

TEST(GenerateFamily, RejectsMalformedSpecs) {
  EXPECT_THROW(sexagesimal::generate_family(FamilySpec{4, 1, 0, 30}),
               std::invalid_argument);
  EXPECT_THROW(sexagesimal::generate_family(FamilySpec{2, 7, 1, 30}),
               std::invalid_argument);
  EXPECT_THROW(sexagesimal::generate_family(FamilySpec{2, 1, 2, 30}),
               std::invalid_argument);
  EXPECT_THROW(sexagesimal::generate_family(FamilySpec{2, 5, 1, 0}),
               std::invalid_argument);
}

TEST(GenerateFamily, CatalogMembershipBounds) {
  EXPECT_TRUE((FamilySpec{2, 3, 8, 30}).in_standard_catalog());
  EXPECT_FALSE((FamilySpec{2, 3, 9, 30}).in_standard_catalog());
  EXPECT_TRUE((FamilySpec{2, 5, 12, 30}).in_standard_catalog());
  EXPECT_FALSE((FamilySpec{2, 5, 13, 30}).in_standard_catalog());
  EXPECT_FALSE((FamilySpec{3, 5, 2, 30}).in_standard_catalog());
  EXPECT_FALSE((FamilySpec{2, 5, 3, 31}).in_standard_catalog());
  EXPECT_TRUE((FamilySpec{2, 5, 3, 10}).in_standard_catalog());
}

TEST(TableOne, GoldenRows) {
  const FamilyTable table = sexagesimal::table_one();
  ASSERT_EQ(table.rows.size(), golden::kTableOneCount);
  for (int n : {11, 17, 23, 30}) {
    const auto& row = table.rows[static_cast<std::size_t>(n - 1)];
    const auto& expected = golden::kTableOne[static_cast<std::size_t>(n - 1)];
    EXPECT_EQ(sexagesimal::format(row.head), expected.head) << "n=" << n;
    EXPECT_EQ(sexagesimal::format(row.tail), expected.tail) << "n=" << n;
  }
}

}  // namespace
