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

#include "qfruit/compile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qfruit {

namespace {

void check_register(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 62)
    throw std::invalid_argument("register size must be in [1, 62] qubits");
}

std::vector<std::pair<SuzukiFactor, double>> scaled(
    const std::vector<std::pair<SuzukiFactor, double>>& sched, double factor) {
  auto out = sched;
  for (auto& [which, c] : out) c *= factor;
  return out;
}

void add_pad(std::vector<SeoItem>& items, const std::vector<int>& pads) {
  for (auto& item : items) {
    if (auto* loop = std::get_if<Loop>(&item.value)) {
      add_pad(loop->body, pads);
      continue;
    }
    auto& gate = std::get<Gate>(item.value);
    for (int q : pads) {
      const bool clash =
          (gate.target && *gate.target == q) ||
          std::any_of(gate.controls.begin(), gate.controls.end(),
                      [q](const Control& c) { return c.qubit == q; });
      if (clash)
        throw std::invalid_argument("pad qubit " + std::to_string(q) +
                                    " is already used by the fragment");
      gate.controls.push_back({q, false});
    }
    std::sort(gate.controls.begin(), gate.controls.end(),
              [](const Control& a, const Control& b) { return a.qubit < b.qubit; });
  }
}

// Controls fixing every qubit of `state` except those in `skip_mask`.
std::vector<Control> fixing_controls(StateIndex state, int num_qubits,
                                     StateIndex skip_mask) {
  std::vector<Control> controls;
  for (int q = 0; q < num_qubits; ++q) {
    const StateIndex bit = StateIndex{1} << q;
    if (skip_mask & bit) continue;
    controls.push_back({q, (state & bit) != 0});
  }
  return controls;
}

}  // namespace

std::vector<std::pair<SuzukiFactor, double>> suzuki_schedule(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("Suzuki order must be even and >= 2, got " +
                                std::to_string(order) + "; order must be even");
  if (order == 2)
    return {{SuzukiFactor::A, 0.5}, {SuzukiFactor::B, 1.0}, {SuzukiFactor::A, 0.5}};
  const auto lower = suzuki_schedule(order - 2);
  const double p = 1.0 / (4.0 - std::pow(4.0, 1.0 / (order - 1)));
  std::vector<std::pair<SuzukiFactor, double>> out;
  for (double factor : {p, p, 1.0 - 4.0 * p, p, p}) {
    auto part = scaled(lower, factor);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

SeoProgram two_state_rotation(StateIndex a, StateIndex b, double theta,
                              int num_qubits) {
  check_register(num_qubits);
  const StateIndex ns = StateIndex{1} << num_qubits;
  if (a == b) throw std::invalid_argument("two_state_rotation needs a != b");
  if (a >= ns || b >= ns)
    throw std::invalid_argument("two_state_rotation state outside register");

  const StateIndex diff = a ^ b;
  const int pivot = std::countr_zero(diff);
  const StateIndex pivot_bit = StateIndex{1} << pivot;
  const Control on_b_side{pivot, (b & pivot_bit) != 0};

  SeoProgram ladder(num_qubits);
  for (int q = pivot + 1; q < num_qubits; ++q)
    if (diff & (StateIndex{1} << q)) ladder.add(Gate::sigx(q, {on_b_side}));

  SeoProgram out(num_qubits);
  out.append(ladder);
  out.add(Gate::rot(GateKind::ROTX, -2.0 * theta, pivot,
                    fixing_controls(a, num_qubits, pivot_bit)));
  out.append(inverse(ladder));
  return out;
}

SeoProgram compile_shift(StateIndex k, int num_qubits) {
  check_register(num_qubits);
  if (k >= (StateIndex{1} << num_qubits))
    throw std::invalid_argument("shift " + std::to_string(k) +
                                " outside register of " +
                                std::to_string(num_qubits) + " qubits");
  SeoProgram out(num_qubits);
  for (int j = 0; j < num_qubits; ++j) {
    if (!(k & (StateIndex{1} << j))) continue;
    // Add 2^j: flip bit m when bits j..m-1 are all set, highest bit first.
    for (int m = num_qubits - 1; m >= j; --m) {
      std::vector<Control> carry;
      for (int c = j; c < m; ++c) carry.push_back({c, true});
      out.add(Gate::sigx(m, std::move(carry)));
    }
  }
  return out;
}

SeoProgram pad_controls(const SeoProgram& fragment,
                        const std::vector<int>& pad_qubits) {
  int n = fragment.num_qubits;
  for (int q : pad_qubits) {
    if (q < 0) throw std::invalid_argument("negative pad qubit");
    n = std::max(n, q + 1);
  }
  SeoProgram out = widened(fragment, n);
  add_pad(out.body, pad_qubits);
  return out;
}

SeoProgram conjugate_by_shift(const SeoProgram& fragment, StateIndex k,
                              int num_qubits) {
  const SeoProgram shift = compile_shift(k, num_qubits);
  SeoProgram out(num_qubits);
  out.append(inverse(shift));
  out.append(fragment);
  out.append(shift);
  return out;
}

SeoProgram embed_block(const SeoProgram& fragment, StateIndex offset,
                       int num_qubits) {
  std::vector<int> pads;
  for (int q = fragment.num_qubits; q < num_qubits; ++q) pads.push_back(q);
  return conjugate_by_shift(pad_controls(fragment, pads), offset, num_qubits);
}

SeoProgram suzuki(int order, double t, const SuzukiEmitters& emitters) {
  SeoProgram out(emitters.num_qubits);
  for (const auto& [which, c] : suzuki_schedule(order))
    out.append(which == SuzukiFactor::A ? emitters.emit_a(c * t)
                                        : emitters.emit_b(c * t));
  return out;
}

SeoProgram trotterize(const std::function<SeoProgram(double)>& builder,
                      double g, int n_trots) {
  if (n_trots < 1) throw std::invalid_argument("number of trots must be >= 1");
  SeoProgram one_trot = builder(g / n_trots);
  if (n_trots == 1) return one_trot;
  SeoProgram out(one_trot.num_qubits);
  out.add_loop(0, n_trots, std::move(one_trot));
  renumber_loops(out);
  return out;
}

SeoProgram compile_glue(const FruitLayout& layout, StateIndex door, double g) {
  return two_state_rotation(door, layout.tree_root(), g, layout.nb_total);
}

SeoProgram compile_oracle(const FruitLayout& layout, const NandInputs& inputs,
                          double g) {
  if (inputs.x.size() != layout.ns_lvs)
    throw std::invalid_argument("NAND input length does not match leaf count");
  SeoProgram out(layout.nb_total);
  for (StateIndex k = 0; k < layout.ns_lvs; ++k)
    if (inputs.x[k])
      out.append(two_state_rotation(layout.leaf(k), layout.extra(k), g,
                                    layout.nb_total));
  return out;
}

SeoProgram compile_line(int nb_line, double g_eff, int r_line, int nt_line) {
  const auto gray = gray_code(nb_line);
  // Edges alternate between the two matchings of the path.
  std::vector<std::pair<StateIndex, StateIndex>> matching[2];
  for (std::size_t j = 0; j + 1 < gray.size(); ++j)
    matching[j % 2].push_back(std::minmax(gray[j], gray[j + 1]));
  for (auto& m : matching) std::sort(m.begin(), m.end());

  auto exp_matching = [nb_line](const auto& edges, double t) {
    SeoProgram out(nb_line);
    for (const auto& [a, b] : edges) out.append(two_state_rotation(a, b, t, nb_line));
    return out;
  };
  SuzukiEmitters em{
      nb_line,
      [&](double t) { return exp_matching(matching[0], t); },
      [&](double t) { return exp_matching(matching[1], t); },
  };
  return trotterize([&](double t) { return suzuki(r_line, t, em); }, g_eff,
                    nt_line);
}

SeoProgram tree_layer(int nb_tree, double t, int parent_depth_parity) {
  check_register(nb_tree);
  if (nb_tree < 2) throw std::invalid_argument("tree needs nb_tree >= 2");
  const StateIndex ns = StateIndex{1} << nb_tree;
  SeoProgram out(nb_tree);
  for (StateIndex parent = 1; parent < ns / 2; ++parent) {
    const int depth = std::bit_width(parent) - 1;
    if (depth % 2 != parent_depth_parity) continue;
    // The star parent-{2p, 2p+1} couples the parent to (|2p> + |2p+1>)/sqrt2
    // with strength sqrt2. ROTY(pi/2) on bit 0 of the children maps |2p> to
    // that symmetric state, so conjugating a two-state rotation with it is
    // exact.
    const auto children = fixing_controls(2 * parent, nb_tree, StateIndex{1});
    out.add(Gate::rot(GateKind::ROTY, -std::numbers::pi / 2, 0, children));
    out.append(two_state_rotation(parent, 2 * parent, std::numbers::sqrt2 * t,
                                  nb_tree));
    out.add(Gate::rot(GateKind::ROTY, std::numbers::pi / 2, 0, children));
  }
  return out;
}

SeoProgram compile_tree(int nb_tree, double g_eff, int nt_tree) {
  SuzukiEmitters em{
      nb_tree,
      [nb_tree](double t) { return tree_layer(nb_tree, t, 0); },
      [nb_tree](double t) { return tree_layer(nb_tree, t, 1); },
  };
  return trotterize([&](double t) { return suzuki(kTreeOrder, t, em); }, g_eff,
                    nt_tree);
}

FruitCompilation compile_fruit(const FruitSpec& spec) {
  FruitCompilation out;
  out.hamiltonians = assemble_fruit(spec);
  const FruitLayout& layout = out.hamiltonians.layout;
  const NandInputs& inputs = out.hamiltonians.inputs;
  const int n = layout.nb_total;
  const auto door = static_cast<StateIndex>(spec.door);

  SuzukiEmitters meta{
      n,
      [&](double t) {
        SeoProgram bulk(n);
        bulk.append(embed_block(
            compile_line(spec.nb_line, t, spec.r_line, spec.nt_line), 0, n));
        bulk.append(embed_block(compile_tree(spec.nb_tree, t, spec.nt_tree),
                                layout.tree_offset, n));
        return bulk;
      },
      [&](double t) {
        SeoProgram corr(n);
        corr.append(compile_glue(layout, door, t));
        corr.append(compile_oracle(layout, inputs, t));
        return corr;
      },
  };
  out.program = trotterize([&](double t) { return suzuki(spec.r_meta, t, meta); },
                           spec.g, spec.nt_meta);
  renumber_loops(out.program);
  validate(out.program);

  out.report.num_qubits = n;
  out.report.num_elementary_ops = count_elementary_ops(out.program);
  return out;
}

}  // namespace qfruit
