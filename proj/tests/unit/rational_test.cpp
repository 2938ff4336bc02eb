// Copyright 2026 The ci-mirror Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include "cimirror/errors.hpp"
#include "cimirror/rational.hpp"

using namespace cimirror;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("2875/12")), "2875/12");
  EXPECT_EQ(to_string(parse_rational("-4/8")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("+14752")), "14752");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Rational, MakeRationalIsCanonical) {
  EXPECT_EQ(make_rational(-2, 2), Rational(-1));
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_TRUE(is_integral(make_rational(10, 5)));
  EXPECT_FALSE(is_integral(make_rational(1, 3)));
}
