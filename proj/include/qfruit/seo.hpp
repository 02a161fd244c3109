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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfruit/hamiltonian.hpp"

namespace qfruit {

enum class GateKind { SIGX, ROTX, ROTY, ROTZ, PHAS };

std::string_view mnemonic(GateKind kind);

struct Control {
  int qubit = 0;
  bool on_one = true;  // T control if true, F control otherwise
  bool operator==(const Control&) const = default;
};

/// One elementary operation. Rotations follow ROTA(θ) = exp(-iθσ_A/2);
/// PHAS(θ) multiplies the control-satisfied subspace by e^{iθ} (the whole
/// register when uncontrolled). A PHAS with a target treats the target as one
/// more T control.
struct Gate {
  GateKind kind = GateKind::SIGX;
  std::optional<int> target;
  double angle = 0.0;
  std::vector<Control> controls;  // kept sorted by qubit

  static Gate sigx(int target, std::vector<Control> controls = {});
  static Gate rot(GateKind axis, double angle, int target,
                  std::vector<Control> controls = {});
  static Gate phas(double angle, std::vector<Control> controls = {},
                   std::optional<int> target = std::nullopt);

  bool has_angle() const { return kind != GateKind::SIGX; }
  bool operator==(const Gate&) const = default;
};

struct SeoItem;

struct Loop {
  int id = 0;
  std::int64_t reps = 1;
  std::vector<SeoItem> body;
};

struct SeoItem {
  std::variant<Gate, Loop> value;
};

bool operator==(const Loop& a, const Loop& b);
bool operator==(const SeoItem& a, const SeoItem& b);

/// A gate sequence with nestable LOOP/NEXT groups.
struct SeoProgram {
  int num_qubits = 0;
  std::vector<SeoItem> body;

  SeoProgram() = default;
  explicit SeoProgram(int n) : num_qubits(n) {}

  SeoProgram& add(Gate gate);
  SeoProgram& add_loop(int id, std::int64_t reps, SeoProgram inner);
  /// Appends the items of `other`; its qubit count must not exceed ours.
  SeoProgram& append(const SeoProgram& other);

  bool empty() const { return body.empty(); }
  bool operator==(const SeoProgram&) const = default;
};

/// Throws std::invalid_argument if a gate or loop breaks the program
/// invariants (qubit ranges, target/control overlap, duplicate loop ids,
/// reps < 1).
void validate(const SeoProgram& program);

/// Loop-aware count: LOOP/NEXT markers count zero and each gate counts the
/// product of the reps of its enclosing loops.
std::uint64_t count_elementary_ops(const SeoProgram& program);

std::vector<Gate> expand(const SeoProgram& program);

/// Reassigns loop ids 0, 1, 2, ... in pre-order.
void renumber_loops(SeoProgram& program);

/// Program whose unitary is the inverse of `program`'s.
SeoProgram inverse(const SeoProgram& program);

/// Same gates on a register of `num_qubits` >= program.num_qubits.
SeoProgram widened(const SeoProgram& program, int num_qubits);

class SeoParseError : public std::runtime_error {
 public:
  SeoParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Shortest decimal form that reads back to the same double (17 sig. digits).
std::string format_angle(double angle);

std::string english_text(const SeoProgram& program);
std::string picture_text(const SeoProgram& program);
SeoProgram parse_english_text(std::string_view text);

void write_english(const SeoProgram& program, const std::filesystem::path& path);
void write_picture(const SeoProgram& program, const std::filesystem::path& path);
SeoProgram parse_english(const std::filesystem::path& path);

struct CompileReport {
  int num_qubits = 0;
  std::uint64_t num_elementary_ops = 0;
  std::optional<double> error;  // set only when verification ran
  std::string message;          // empty on success
};

void write_log(const CompileReport& report, const FruitSpec& spec,
               const std::filesystem::path& path);

}  // namespace qfruit
