#include "hqcl/common.hpp"

#include <cstdlib>
#include <string>

namespace hqcl {

double semantic_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("HQCL_TOL")) {
      try {
        double v = std::stod(env);
        if (v > 0) return v;
      } catch (...) {
      }
    }
    return 1e-9;
  }();
  return tol;
}

}  // namespace hqcl
