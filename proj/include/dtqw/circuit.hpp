// Copyright 2026 The dtqw Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Gate IR, circuits, and the structural analyses run over them: gate
 * counting, ASAP depth, inversion, coupling-map validation and rewriting
 * into the {CX, Rz, SX, X} native basis.
 *
 * Qubit q carries weight 2^q in a basis index. For a walk with n position
 * qubits, qubits 0..n-1 hold the position (qubit 0 least significant) and
 * qubit n holds the coin.
 */
#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtqw/types.hpp"

namespace dtqw {

enum class GateKind {
    X,
    H,
    SqrtX,
    Rz,
    Phase,
    Unitary1q,
    CX,
    ControlledPhase,
    MultiControlledX,
    /// Scheduling directive: synchronises its qubits, occupies no layer and
    /// is ignored by simulation and counting.
    Barrier,
};

std::string_view to_string(GateKind kind);

/// A control line. `polarity` is the qubit value that enables the gate.
struct Control {
    Qubit qubit;
    bool polarity = true;

    friend bool operator==(const Control &, const Control &) = default;
};

class Gate {
  public:
    static Gate x(Qubit q);
    static Gate h(Qubit q);
    static Gate sqrt_x(Qubit q);
    static Gate rz(Qubit q, double lambda);
    /// diag(1, e^{i phi}); R_k is phase(2 pi / 2^k).
    static Gate phase(Qubit q, double phi);
    /// Arbitrary one-qubit unitary. Throws std::invalid_argument if
    /// ||U^dagger U - I||_inf > 1e-10.
    static Gate unitary(Qubit q, const Mat2 &u);
    static Gate cx(Qubit control, Qubit target);
    /// Symmetric in its two qubits; `a` is stored as the control.
    static Gate cphase(Qubit a, Qubit b, double phi);
    /// Controls must be pairwise distinct and distinct from the target.
    static Gate mcx(std::vector<Control> controls, Qubit target);
    static Gate barrier(std::vector<Qubit> qubits);

    GateKind kind() const { return kind_; }
    Qubit target() const { return target_; }
    const std::vector<Control> &controls() const { return controls_; }
    /// Rotation or phase angle (Rz, Phase, ControlledPhase); 0 otherwise.
    double angle() const { return angle_; }

    /// Controls (in order) followed by the target; for a barrier, its span.
    std::vector<Qubit> qubits() const;
    std::size_t arity() const;
    bool is_directive() const { return kind_ == GateKind::Barrier; }

    /// The 2x2 matrix applied to the target when all controls fire.
    Mat2 target_matrix() const;

    Gate adjoint() const;

    friend bool operator==(const Gate &, const Gate &) = default;

  private:
    Gate() = default;

    GateKind kind_ = GateKind::X;
    Qubit target_ = 0;
    std::vector<Control> controls_;
    std::vector<Qubit> span_;
    double angle_ = 0.0;
    Mat2 matrix_{};
};

class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits, std::string label = {});

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const std::string &label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Throws std::out_of_range if the gate touches a qubit >= n_qubits().
    Circuit &add(Gate gate);
    /// Appends `other`, which must have the same width.
    Circuit &append(const Circuit &other);
    /// Appends `sub` with its qubit i relabelled to wires[i].
    Circuit &append_mapped(const Circuit &sub, std::span<const Qubit> wires);
    /// Barrier across every qubit.
    Circuit &barrier();

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::string label_;
};

/// Table-style resource figures: one-/two-qubit gate counts, depth and
/// ancilla qubits.
struct MetricsReport {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t depth = 0;
    std::int64_t ancillae = 0;

    friend bool operator==(const MetricsReport &,
                           const MetricsReport &) = default;
};

/// Raised by counting and depth on gates that have no 1q/2q cost.
class UnloweredGateError : public std::invalid_argument {
  public:
    UnloweredGateError(std::size_t gate_index, const std::string &what)
        : std::invalid_argument(what), gate_index_(gate_index) {}
    std::size_t gate_index() const { return gate_index_; }

  private:
    std::size_t gate_index_;
};

/// Counts 1q and 2q gates and fills in `depth`. Barriers are free.
/// Negative-polarity controls count like positive ones.
/// Throws UnloweredGateError on a MultiControlledX with two or more controls.
MetricsReport gate_counts(const Circuit &circuit);

/// Longest chain in the order "g before h iff g is earlier and shares a
/// qubit with h". A barrier lifts all its qubits to their common maximum
/// without adding a layer.
std::int64_t depth(const Circuit &circuit);

/// Reversed gate list with every gate replaced by its adjoint.
Circuit inverse(const Circuit &circuit);

/// Physical qubit adjacency.
class CouplingMap {
  public:
    CouplingMap(std::size_t device_size,
                std::span<const std::pair<Qubit, Qubit>> edges);

    std::size_t device_size() const { return device_size_; }
    bool adjacent(Qubit a, Qubit b) const;
    const std::set<std::pair<Qubit, Qubit>> &edges() const { return edges_; }

    /// 27-qubit heavy-hex Falcon r5.11 layout of ibm_cairo.
    static CouplingMap ibm_cairo();

  private:
    std::size_t device_size_;
    std::set<std::pair<Qubit, Qubit>> edges_;
};

struct LayoutViolation {
    std::size_t gate_index;
    std::vector<Qubit> logical;
    std::vector<Qubit> physical;
    std::string reason;
};

/// One record per gate whose qubits are not adjacent on the device.
/// placement[i] is the physical qubit hosting logical qubit i.
/// Throws std::invalid_argument if the placement is too short, not
/// injective or leaves the device.
std::vector<LayoutViolation> validate_layout(const Circuit &circuit,
                                             const CouplingMap &map,
                                             std::span<const Qubit> placement);

/// Rewrites into {CX, Rz, SqrtX, X}; equal to the input up to global phase.
Circuit rewrite_to_native(const Circuit &circuit);

} // namespace dtqw
