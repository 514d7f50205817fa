#include "universe.hpp"

#include "reader.hpp"

namespace specforge {

const Universe& default_universe() {
  static const Universe u = [] {
    Universe r;
    r.values = read_all("NIL T A B 0 1 2 -1 (A) (A B) (0 1) (A . B)");
    r.fuel = 10000;
    return r;
  }();
  return u;
}

}  // namespace specforge
