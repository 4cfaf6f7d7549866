#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dpm/interfam.hpp"
#include "dpm/periods.hpp"
#include "dpm/pseudolattice.hpp"
#include "dpm/rootlattice.hpp"
#include "dpm/vancycles.hpp"
#include "dpm/weierstrass.hpp"

namespace dpm::io {

using nlohmann::json;

// rationals always travel as "num/den" (or "n")
json rational(const Rational& q);
json poly(const UniPoly& p);  // dense list of rational strings, low degree first
json complex(Complex z);      // [re, im]
json matrix(const IMat& A);
json matrix(const QMat& A);
json classes(const std::vector<HomologyClass>& row);

json report(const WeierstrassForm& W);
json report(const FiberConfiguration& F);
json report(const MirrorCheck& m);
json report(const VanishingData& v);
json report(const TheoremReport& r);
json report(const RootSystemReport& r);
json report(const KernelDecomposition& k);
json report(const KuznetsovBasis& k);
json report(const SplittingReport& s);
json report(const TrajectorySet& T);  // summary, samples go to CSV

// stable two-space indentation, trailing newline
std::string dump(const json& j);

}  // namespace dpm::io
