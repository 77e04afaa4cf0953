// Copyright 2026 The Cliffred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffred/engine.h"

namespace cliffred {

enum class AxisFamily { H, T, Custom };

struct MagicAxis {
    AxisFamily family = AxisFamily::T;
    Bloch axis{0, 0, 1};

    /// (1, 0, 1) / sqrt 2
    static MagicAxis h_type();
    /// (1, 1, 1) / sqrt 3
    static MagicAxis t_type();
    /// Throws std::invalid_argument unless |axis| = 1 within 1e-12.
    static MagicAxis custom(const Bloch &axis);
    /// "H", "T" or "x,y,z".
    static MagicAxis parse(std::string_view text);

    std::string str() const;
};

/// (2f - 1) axis. Throws for f outside [0, 1].
Bloch magic_state(double f, const MagicAxis &axis);

struct ProtocolSpec {
    std::string name;
    StabilizerCode code;
    MagicAxis input_axis;
    Bloch target{0, 0, 1};
    /// Single-qubit Clifford applied to the decoded output.
    std::optional<CliffordTableau> post_clifford;
};

/// Bloch vector of C rho C^dag for a single-qubit tableau C.
Bloch apply_clifford(const CliffordTableau &c, const Bloch &r);

enum class MapPath { GroupSum, Dense };

struct MapPoint {
    double f_in = 0;
    double f_out = 0;
    double p_success = 0;
};

/// One round: n copies of magic_state(f), project, decode, post_clifford,
/// fidelity with the target. Throws UndefinedResultError if p = 0.
MapPoint iterate_map(const ProtocolSpec &spec, double f, MapPath path = MapPath::GroupSum,
                     const EngineOptions &opts = {});

class NoThresholdInBracket : public std::runtime_error {
   public:
    NoThresholdInBracket(double lo, double hi, double gain_lo, double gain_hi);
    double gain_lo, gain_hi;
};

struct ThresholdResult {
    double threshold = 0;
    size_t iterations = 0;
};

constexpr double kDefaultBracketLo = 0.55;
constexpr double kDefaultBracketHi = 0.999;
constexpr double kDefaultTolerance = 1e-9;

/// Bisection on the gain f_out(f) - f. Needs a sign change on [lo, hi];
/// stops after ceil(log2((hi - lo) / tol)) halvings.
ThresholdResult find_threshold(const ProtocolSpec &spec, double lo = kDefaultBracketLo, double hi = kDefaultBracketHi,
                               double tol = kDefaultTolerance, MapPath path = MapPath::GroupSum,
                               const EngineOptions &opts = {});

/// k evenly spaced points from a to b inclusive (k >= 2; k = 1 gives a).
std::vector<MapPoint> sweep(const ProtocolSpec &spec, double a, double b, size_t k, MapPath path = MapPath::GroupSum,
                            const EngineOptions &opts = {});

/// "f_in,f_out,p_success" then one row per point, 17 significant digits.
std::string sweep_csv(const std::vector<MapPoint> &points);

/// f, then f after each of `rounds` applications of the map.
std::vector<double> trajectory(const ProtocolSpec &spec, double f, size_t rounds, const EngineOptions &opts = {});

const std::vector<std::string> &builtin_names();
/// steane7, five_qubit, parity2, reed_muller15. Throws std::invalid_argument
/// for anything else.
ProtocolSpec builtin(std::string_view name);

/// Spec for a user code: the target is the input axis, no post Clifford.
ProtocolSpec protocol_from_code(const StabilizerCode &code, const MagicAxis &axis, std::string name = "custom");

}  // namespace cliffred
