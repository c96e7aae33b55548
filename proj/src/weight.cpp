#include "ywall/weight.hpp"

#include <sstream>

#include "ywall/error.hpp"

namespace ywall {

Weight simple_root(int i) {
  switch (i) {
    case 0:
      return kAlpha0;
    case 1:
      return kAlpha1;
    default:
      throw DomainError("simple root index must be 0 or 1, got " + std::to_string(i));
  }
}

int pair(int i, const Weight& w) { return pair(i, w.classical()); }

int pair(int i, const ClassicalWeight& w) {
  switch (i) {
    case 0:
      return w.c0;
    case 1:
      return w.c1;
    default:
      throw DomainError("coroot index must be 0 or 1, got " + std::to_string(i));
  }
}

int level(const Weight& w) { return level(w.classical()); }
int level(const ClassicalWeight& w) { return w.c0 + 2 * w.c1; }

Weight dominant(int l, int a) {
  if (l < 1) throw DomainError("level must be positive, got " + std::to_string(l));
  if (a < 0 || a > l / 2) {
    throw DomainError("ground index a=" + std::to_string(a) + " is not dominant at level " +
                      std::to_string(l));
  }
  return {l - 2 * a, a, 0};
}

bool is_dominant(const Weight& w) { return w.c0 >= 0 && w.c1 >= 0; }

namespace {

void append_term(std::ostringstream& os, bool& first, int coeff, const char* symbol) {
  if (coeff == 0) return;
  if (coeff < 0) {
    os << "-";
  } else if (!first) {
    os << "+";
  }
  int mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) os << mag;
  os << symbol;
  first = false;
}

}  // namespace

std::string to_string(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, w.c0, "L0");
  append_term(os, first, w.c1, "L1");
  if (w.cd % 2 == 0) {
    append_term(os, first, w.cd / 2, "d");
  } else {
    append_term(os, first, w.cd, "d/2");
  }
  if (first) return "0";
  return os.str();
}

std::string to_string(const ClassicalWeight& w) { return to_string(as_weight(w)); }

}  // namespace ywall
