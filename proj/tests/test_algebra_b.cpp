#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainfty/algebra_b.hpp"
#include "ainfty/verify.hpp"

#include <iostream>

using namespace ainfty;

TEST_CASE("sweep") {
  Caps c;
  c.N = 3;
  c.maxLen = 6;
  c.maxInputs = 4;
  auto r = verify_algebra_b(c);
  std::cout << r.to_text();
  CHECK(r.pass());
}
