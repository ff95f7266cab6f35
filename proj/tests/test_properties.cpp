#include <gtest/gtest.h>

#include "properties.hpp"

using namespace tritile::test;

TEST(Properties, FieldAxioms) { EXPECT_EQ(field_axioms(1000, 1).failures, 0); }
TEST(Properties, AutomorphismHomomorphism) { EXPECT_EQ(automorphism_homomorphism(1000, 2).failures, 0); }
TEST(Properties, Pythagorean) { EXPECT_EQ(pythagorean(1000, 3).failures, 0); }
TEST(Properties, MinpolyAnnihilates) { EXPECT_EQ(minpoly_annihilates(1000, 4).failures, 0); }
TEST(Properties, CensusIdentities) { EXPECT_EQ(census_identities(1000, 5).failures, 0); }
