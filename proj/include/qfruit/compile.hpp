// Copyright 2026 The qfruit Authors
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

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qfruit/hamiltonian.hpp"
#include "qfruit/seo.hpp"

namespace qfruit {

/// The two exponentials a Suzuki product formula is built from: emit_a(t)
/// realizes e^{iAt} and emit_b(t) realizes e^{iBt}, both on `num_qubits`.
struct SuzukiEmitters {
  int num_qubits = 0;
  std::function<SeoProgram(double)> emit_a;
  std::function<SeoProgram(double)> emit_b;
};

enum class SuzukiFactor { A, B };

/// Flat factor schedule of the order-`order` Suzuki formula: S(t) is the
/// product of e^{i X c t} over the returned (X, c) in order.
std::vector<std::pair<SuzukiFactor, double>> suzuki_schedule(int order);

/// Exact e^{iθ(|a><b| + |b><a|)} on `num_qubits` qubits.
///
/// A ladder of SIGX gates controlled on the lowest differing bit (the pivot)
/// maps b onto a with the pivot flipped while leaving a fixed. One ROTX(-2θ)
/// on the pivot, controlled on every other bit of a, then does the rotation
/// and the ladder is undone.
SeoProgram two_state_rotation(StateIndex a, StateIndex b, double theta,
                              int num_qubits);

/// x -> (x + k) mod 2^num_qubits, built from one incrementer per set bit of k.
SeoProgram compile_shift(StateIndex k, int num_qubits);

/// Adds an F control on every qubit in `pad_qubits` to every gate, widening
/// the register as needed. The result acts as the input on the
/// all-pad-qubits-zero subspace and as the identity elsewhere.
SeoProgram pad_controls(const SeoProgram& fragment,
                        const std::vector<int>& pad_qubits);

/// Moves a block acting at offset 0 to offset k: emits shift(k)^-1, the
/// fragment, then shift(k).
SeoProgram conjugate_by_shift(const SeoProgram& fragment, StateIndex k,
                              int num_qubits);

/// Pads a block fragment to `num_qubits` qubits and relocates it to `offset`.
SeoProgram embed_block(const SeoProgram& fragment, StateIndex offset,
                       int num_qubits);

SeoProgram suzuki(int order, double t, const SuzukiEmitters& emitters);

/// builder(g / n_trots) repeated n_trots times in a LOOP (bare for 1 trot).
SeoProgram trotterize(const std::function<SeoProgram(double)>& builder,
                      double g, int n_trots);

SeoProgram compile_glue(const FruitLayout& layout, StateIndex door, double g);
SeoProgram compile_oracle(const FruitLayout& layout, const NandInputs& inputs,
                          double g);

/// e^{i g_eff L} for the 0/1 line incidence matrix L on nb_line qubits,
/// split into even- and odd-position Gray edges.
SeoProgram compile_line(int nb_line, double g_eff, int r_line, int nt_line);

/// Exact e^{i t T_d} where T_d holds the tree edges whose parent sits at
/// depths of parity `parent_depth_parity`.
SeoProgram tree_layer(int nb_tree, double t, int parent_depth_parity);

/// e^{i g_eff T} for the 0/1 tree incidence matrix on nb_tree qubits: order-4
/// Suzuki over the even/odd parent-depth split.
SeoProgram compile_tree(int nb_tree, double g_eff, int nt_tree);

/// Effective order used for the tree approximant.
inline constexpr int kTreeOrder = 4;

struct FruitCompilation {
  FruitHamiltonians hamiltonians;
  SeoProgram program;
  CompileReport report;  // error left unset; see verify_compile
};

/// Meta Suzuki over bulk (line then tree, each embedded by padding and
/// shifting) and corrections (glue then oracle on the full register).
FruitCompilation compile_fruit(const FruitSpec& spec);

}  // namespace qfruit
