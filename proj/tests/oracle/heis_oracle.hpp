#pragma once

// Independent evaluation of the sector-1 Heisenberg pairing straight from the
// group law on pairs (eps, x), without the group library. Used to pin the
// brute-force engine and the derived spectra.

#include <gmpxx.h>

#include <vector>

namespace oracle {

struct Heis {
  int n;
  unsigned space() const { return 1u << (2 * n); }
  static unsigned bit(unsigned v, int j) { return (v >> j) & 1u; }
  unsigned form(unsigned x, unsigned y) const {
    unsigned s = 0;
    for (int k = 0; k < n; ++k) s ^= (bit(x, 2 * k) & bit(y, 2 * k + 1)) ^ (bit(x, 2 * k + 1) & bit(y, 2 * k));
    return s;
  }
  // conj by z: z x z^-1 has E-part x and central part eps + <z, x>.
  // For sector-1 characters only E-parts matter, so
  // (xdot, y), (x'dot, y') = 1/2 |Zbar x|^-1 |Zbar x'|^-1 sum over z = (e, w)
  // with <x, x'> = 0 (the commuting condition after conjugation is
  // independent of w) of (-1)^{<x, y'>} (-1)^{<x', y>}.
  mpq_class pair(unsigned x, unsigned y, unsigned xp, unsigned yp) const {
    if (form(x, xp)) return 0;
    const long zx = x == 0 ? 2L * space() / 2 : space() / 2;   // |Z(x)| / 2
    const long zxp = xp == 0 ? 2L * space() / 2 : space() / 2;
    long sum = 0;
    for (unsigned z = 0; z < 2 * space(); ++z) sum += ((form(x, yp) ^ form(xp, y)) ? -1 : 1);
    mpq_class v(sum, 2 * zx * zxp);
    v.canonicalize();
    return v;
  }
  std::vector<std::pair<unsigned, unsigned>> z_index() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned x = 0; x < space(); ++x)
      for (unsigned y = 0; y < space(); ++y)
        if (x == 0 || y < (y ^ x)) out.push_back({x, y});
    return out;
  }
};

}  // namespace oracle
