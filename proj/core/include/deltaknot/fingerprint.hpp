#pragma once

#include "deltaknot/classical.hpp"
#include "deltaknot/homfly.hpp"
#include "deltaknot/poly.hpp"

namespace dk {

/// Identification fingerprint: HOMFLY-PT in (v, z) plus its Jones and
/// Alexander specializations in t, and the component count.
struct Fingerprint {
  Laurent homfly;
  Laurent jones;
  Laurent alexander;
  int components = 1;

  bool operator==(const Fingerprint& o) const = default;
  bool operator<(const Fingerprint& o) const;
  std::string str() const;
};

/// Jones as a HOMFLY specialization; the substitution is fixed so that it
/// agrees with the writhe-normalized Kauffman bracket in t = A^-4.
Laurent jones_from_homfly(const Laurent& p);
/// Alexander-Conway at v = 1, in the symmetric variable t.
Laurent alexander_from_homfly(const Laurent& p);

Fingerprint fingerprint(const ClassicalDiagram& d, HomflyEngine* engine = nullptr);
/// Coordinate-wise mirror transform; involution, fixed on amphichiral knots.
Fingerprint mirror_fingerprint(const Fingerprint& f);

}  // namespace dk
