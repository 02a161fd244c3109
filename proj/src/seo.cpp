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

#include "qfruit/seo.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qfruit {

namespace {

void sort_controls(std::vector<Control>& controls) {
  std::sort(controls.begin(), controls.end(),
            [](const Control& a, const Control& b) { return a.qubit < b.qubit; });
}

template <class F>
void for_each_gate(const std::vector<SeoItem>& items, F&& f) {
  for (const auto& item : items) {
    if (const auto* gate = std::get_if<Gate>(&item.value)) {
      f(*gate);
    } else {
      for_each_gate(std::get<Loop>(item.value).body, f);
    }
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::SIGX: return "SIGX";
    case GateKind::ROTX: return "ROTX";
    case GateKind::ROTY: return "ROTY";
    case GateKind::ROTZ: return "ROTZ";
    case GateKind::PHAS: return "PHAS";
  }
  return "?";
}

Gate Gate::sigx(int target, std::vector<Control> controls) {
  sort_controls(controls);
  return Gate{GateKind::SIGX, target, 0.0, std::move(controls)};
}

Gate Gate::rot(GateKind axis, double angle, int target,
               std::vector<Control> controls) {
  if (axis != GateKind::ROTX && axis != GateKind::ROTY && axis != GateKind::ROTZ)
    throw std::invalid_argument("Gate::rot needs ROTX, ROTY or ROTZ");
  sort_controls(controls);
  return Gate{axis, target, angle, std::move(controls)};
}

Gate Gate::phas(double angle, std::vector<Control> controls,
                std::optional<int> target) {
  sort_controls(controls);
  return Gate{GateKind::PHAS, target, angle, std::move(controls)};
}

bool operator==(const Loop& a, const Loop& b) {
  return a.id == b.id && a.reps == b.reps && a.body == b.body;
}

bool operator==(const SeoItem& a, const SeoItem& b) { return a.value == b.value; }

SeoProgram& SeoProgram::add(Gate gate) {
  body.push_back({std::move(gate)});
  return *this;
}

SeoProgram& SeoProgram::add_loop(int id, std::int64_t reps, SeoProgram inner) {
  body.push_back({Loop{id, reps, std::move(inner.body)}});
  return *this;
}

SeoProgram& SeoProgram::append(const SeoProgram& other) {
  if (other.num_qubits > num_qubits)
    throw std::invalid_argument("cannot append a " +
                                std::to_string(other.num_qubits) +
                                "-qubit program to a " +
                                std::to_string(num_qubits) + "-qubit one");
  body.insert(body.end(), other.body.begin(), other.body.end());
  return *this;
}

void validate(const SeoProgram& program) {
  if (program.num_qubits < 1)
    throw std::invalid_argument("program needs at least one qubit");
  const int n = program.num_qubits;
  std::set<int> loop_ids;
  std::function<void(const std::vector<SeoItem>&)> walk =
      [&](const std::vector<SeoItem>& items) {
        for (const auto& item : items) {
          if (const auto* loop = std::get_if<Loop>(&item.value)) {
            if (!loop_ids.insert(loop->id).second)
              throw std::invalid_argument("duplicate loop id " +
                                          std::to_string(loop->id));
            if (loop->reps < 1)
              throw std::invalid_argument("loop " + std::to_string(loop->id) +
                                          " has reps < 1");
            walk(loop->body);
            continue;
          }
          const auto& gate = std::get<Gate>(item.value);
          if (gate.kind != GateKind::PHAS && !gate.target)
            throw std::invalid_argument(std::string(mnemonic(gate.kind)) +
                                        " needs a target");
          std::set<int> used;
          if (gate.target) {
            if (*gate.target < 0 || *gate.target >= n)
              throw std::invalid_argument("target qubit out of range");
            used.insert(*gate.target);
          }
          for (const auto& c : gate.controls) {
            if (c.qubit < 0 || c.qubit >= n)
              throw std::invalid_argument("control qubit out of range");
            if (!used.insert(c.qubit).second)
              throw std::invalid_argument(
                  "qubit " + std::to_string(c.qubit) +
                  " used twice in one gate (target/control overlap)");
          }
        }
      };
  walk(program.body);
}

namespace {

std::uint64_t count_items(const std::vector<SeoItem>& items) {
  std::uint64_t total = 0;
  for (const auto& item : items) {
    if (std::holds_alternative<Gate>(item.value)) {
      ++total;
    } else {
      const auto& loop = std::get<Loop>(item.value);
      total += static_cast<std::uint64_t>(loop.reps) * count_items(loop.body);
    }
  }
  return total;
}

void expand_items(const std::vector<SeoItem>& items, std::vector<Gate>& out) {
  for (const auto& item : items) {
    if (const auto* gate = std::get_if<Gate>(&item.value)) {
      out.push_back(*gate);
    } else {
      const auto& loop = std::get<Loop>(item.value);
      for (std::int64_t r = 0; r < loop.reps; ++r) expand_items(loop.body, out);
    }
  }
}

void renumber_items(std::vector<SeoItem>& items, int& next_id) {
  for (auto& item : items) {
    if (auto* loop = std::get_if<Loop>(&item.value)) {
      loop->id = next_id++;
      renumber_items(loop->body, next_id);
    }
  }
}

std::vector<SeoItem> inverse_items(const std::vector<SeoItem>& items) {
  std::vector<SeoItem> out;
  out.reserve(items.size());
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    if (const auto* gate = std::get_if<Gate>(&it->value)) {
      Gate inv = *gate;
      if (inv.has_angle()) inv.angle = -inv.angle;
      out.push_back({std::move(inv)});
    } else {
      const auto& loop = std::get<Loop>(it->value);
      out.push_back({Loop{loop.id, loop.reps, inverse_items(loop.body)}});
    }
  }
  return out;
}

}  // namespace

std::uint64_t count_elementary_ops(const SeoProgram& program) {
  return count_items(program.body);
}

std::vector<Gate> expand(const SeoProgram& program) {
  std::vector<Gate> out;
  out.reserve(count_elementary_ops(program));
  expand_items(program.body, out);
  return out;
}

void renumber_loops(SeoProgram& program) {
  int next_id = 0;
  renumber_items(program.body, next_id);
}

SeoProgram inverse(const SeoProgram& program) {
  SeoProgram out(program.num_qubits);
  out.body = inverse_items(program.body);
  return out;
}

SeoProgram widened(const SeoProgram& program, int num_qubits) {
  if (num_qubits < program.num_qubits)
    throw std::invalid_argument("widened() cannot shrink a program");
  SeoProgram out = program;
  out.num_qubits = num_qubits;
  return out;
}

SeoParseError::SeoParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

namespace {

std::string english_gate(const Gate& gate) {
  std::string s(mnemonic(gate.kind));
  if (gate.has_angle()) s += " " + format_angle(gate.angle);
  if (gate.target) s += " AT " + std::to_string(*gate.target);
  if (!gate.controls.empty()) {
    s += " IF";
    for (const auto& c : gate.controls)
      s += " " + std::to_string(c.qubit) + (c.on_one ? "T" : "F");
  }
  return s;
}

char picture_symbol(GateKind kind) {
  switch (kind) {
    case GateKind::SIGX: return 'X';
    case GateKind::ROTX: return 'x';
    case GateKind::ROTY: return 'y';
    case GateKind::ROTZ: return 'z';
    case GateKind::PHAS: return 'P';
  }
  return '?';
}

// Columns: qubit q sits at character 2 * (n - 1 - q), so the highest qubit is
// leftmost and neighbouring columns are separated by one spacer character.
std::string picture_gate(const Gate& gate, int n) {
  const std::size_t width = 2 * static_cast<std::size_t>(n) - 1;
  std::string row(width, ' ');
  auto col = [n](int q) { return 2 * static_cast<std::size_t>(n - 1 - q); };
  for (int q = 0; q < n; ++q) row[col(q)] = '|';

  std::vector<std::size_t> involved;
  if (gate.target) involved.push_back(col(*gate.target));
  for (const auto& c : gate.controls) involved.push_back(col(c.qubit));
  if (!involved.empty()) {
    auto [lo, hi] = std::minmax_element(involved.begin(), involved.end());
    for (std::size_t p = *lo; p <= *hi; ++p) row[p] = '-';
  }
  for (const auto& c : gate.controls) row[col(c.qubit)] = c.on_one ? '@' : 'O';
  if (gate.target) row[col(*gate.target)] = picture_symbol(gate.kind);
  else if (gate.kind == GateKind::PHAS) row += "  PHAS";
  return row;
}

void emit_lines(const std::vector<SeoItem>& items, std::string& out,
                const std::function<std::string(const Gate&)>& gate_line) {
  for (const auto& item : items) {
    if (const auto* gate = std::get_if<Gate>(&item.value)) {
      out += gate_line(*gate);
      out += '\n';
    } else {
      const auto& loop = std::get<Loop>(item.value);
      out += "LOOP " + std::to_string(loop.id) +
             " REPS: " + std::to_string(loop.reps) + "\n";
      emit_lines(loop.body, out, gate_line);
      out += "NEXT " + std::to_string(loop.id) + "\n";
    }
  }
}

std::string header(const SeoProgram& program) {
  return "NUM_QUBITS " + std::to_string(program.num_qubits) + "\n";
}

template <class Int>
bool parse_int(std::string_view token, Int& value) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool parse_double(std::string_view token, double& value) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
      ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::optional<GateKind> gate_kind(std::string_view token) {
  for (auto kind : {GateKind::SIGX, GateKind::ROTX, GateKind::ROTY,
                    GateKind::ROTZ, GateKind::PHAS})
    if (token == mnemonic(kind)) return kind;
  return std::nullopt;
}

}  // namespace

std::string english_text(const SeoProgram& program) {
  std::string out = header(program);
  emit_lines(program.body, out, english_gate);
  return out;
}

std::string picture_text(const SeoProgram& program) {
  std::string out = header(program);
  const int n = program.num_qubits;
  emit_lines(program.body, out,
             [n](const Gate& gate) { return picture_gate(gate, n); });
  return out;
}

SeoProgram parse_english_text(std::string_view text) {
  SeoProgram program;
  bool have_header = false;
  // Open loops, innermost last. Each frame collects the items of its body.
  struct Frame {
    int id;
    std::int64_t reps;
    std::size_t line;
    std::vector<SeoItem> items;
  };
  std::vector<Frame> open;
  std::set<int> seen_ids;
  auto sink = [&]() -> std::vector<SeoItem>& {
    return open.empty() ? program.body : open.back().items;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto tokens = split_ws(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (tokens.empty()) continue;

    auto fail = [&](const std::string& what) -> SeoParseError {
      return SeoParseError(line_no, what);
    };

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "NUM_QUBITS" ||
          !parse_int(tokens[1], program.num_qubits) || program.num_qubits < 1)
        throw fail("expected header 'NUM_QUBITS <n>'");
      have_header = true;
      continue;
    }

    if (tokens[0] == "LOOP") {
      int id = 0;
      std::int64_t reps = 0;
      std::string_view reps_token;
      if (tokens.size() == 4 && tokens[2] == "REPS:") {
        reps_token = tokens[3];
      } else if (tokens.size() == 3 && tokens[2].substr(0, 5) == "REPS:") {
        reps_token = tokens[2].substr(5);
      } else {
        throw fail("expected 'LOOP <id> REPS: <n>'");
      }
      if (!parse_int(tokens[1], id)) throw fail("bad loop id");
      if (!parse_int(reps_token, reps)) throw fail("bad loop reps");
      if (reps < 1) throw fail("loop " + std::to_string(id) + " has reps < 1");
      if (!seen_ids.insert(id).second)
        throw fail("duplicate loop id " + std::to_string(id));
      open.push_back({id, reps, line_no, {}});
      continue;
    }

    if (tokens[0] == "NEXT") {
      int id = 0;
      if (tokens.size() != 2 || !parse_int(tokens[1], id))
        throw fail("expected 'NEXT <id>'");
      if (open.empty()) throw fail("unmatched NEXT " + std::to_string(id));
      if (open.back().id != id)
        throw fail("NEXT " + std::to_string(id) + " does not match open LOOP " +
                   std::to_string(open.back().id));
      Frame frame = std::move(open.back());
      open.pop_back();
      sink().push_back({Loop{frame.id, frame.reps, std::move(frame.items)}});
      continue;
    }

    const auto kind = gate_kind(tokens[0]);
    if (!kind) throw fail("unknown operation '" + std::string(tokens[0]) + "'");
    Gate gate;
    gate.kind = *kind;
    std::size_t t = 1;
    if (gate.has_angle()) {
      if (t >= tokens.size() || !parse_double(tokens[t], gate.angle))
        throw fail("expected angle after " + std::string(tokens[0]));
      ++t;
    }
    if (t < tokens.size() && tokens[t] == "AT") {
      int target = 0;
      if (t + 1 >= tokens.size() || !parse_int(tokens[t + 1], target))
        throw fail("expected qubit index after AT");
      gate.target = target;
      t += 2;
    } else if (gate.kind != GateKind::PHAS) {
      throw fail("expected 'AT <qubit>'");
    }
    if (t < tokens.size()) {
      if (tokens[t] != "IF" || t + 1 == tokens.size())
        throw fail("expected 'IF' followed by controls");
      for (++t; t < tokens.size(); ++t) {
        const auto tok = tokens[t];
        Control c;
        if (tok.size() < 2 || (tok.back() != 'T' && tok.back() != 'F') ||
            !parse_int(tok.substr(0, tok.size() - 1), c.qubit))
          throw fail("bad control '" + std::string(tok) + "'");
        c.on_one = tok.back() == 'T';
        gate.controls.push_back(c);
      }
      sort_controls(gate.controls);
    }
    SeoProgram check(program.num_qubits);
    check.add(gate);
    try {
      validate(check);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    sink().push_back({std::move(gate)});
  }

  if (!have_header) throw SeoParseError(line_no, "missing 'NUM_QUBITS <n>' header");
  if (!open.empty())
    throw SeoParseError(open.back().line,
                        "unmatched LOOP " + std::to_string(open.back().id));
  return program;
}

void write_english(const SeoProgram& program, const std::filesystem::path& path) {
  write_file(path, english_text(program));
}

void write_picture(const SeoProgram& program, const std::filesystem::path& path) {
  write_file(path, picture_text(program));
}

SeoProgram parse_english(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_english_text(buf.str());
}

void write_log(const CompileReport& report, const FruitSpec& spec,
               const std::filesystem::path& path) {
  std::ostringstream log;
  log << "File Prefix: " << spec.file_prefix << "\n"
      << "Line: Number of Qubits: " << spec.nb_line << "\n"
      << "Tree: Number of Qubits: " << spec.nb_tree << "\n"
      << "Coupling Constant: " << format_angle(spec.g) << "\n"
      << "Line Door: " << spec.door << "\n"
      << "Bands: " << spec.bands_text << "\n"
      << "Line: Number of Trots: " << spec.nt_line << "\n"
      << "Line: Order of Approximant: " << spec.r_line << "\n"
      << "Tree: Number of Trots: " << spec.nt_tree << "\n"
      << "Tree: Order of Approximant: 4 (substituted for the fixed order 3)\n"
      << "Meta: Number of Trots: " << spec.nt_meta << "\n"
      << "Meta: Order of Approximant: " << spec.r_meta << "\n"
      << "Angle Unit: radians\n"
      << "Number of Qubits: " << report.num_qubits << "\n"
      << "Number of Elementary Operations: " << report.num_elementary_ops << "\n"
      << "Error: "
      << (report.error ? format_angle(*report.error) : std::string("skipped"))
      << "\n"
      << "Message: " << (report.message.empty() ? "OK" : report.message) << "\n";
  write_file(path, log.str());
}

}  // namespace qfruit
