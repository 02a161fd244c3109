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

#include "qfruit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>

#include "qfruit/compile.hpp"
#include "qfruit/verify.hpp"

namespace qfruit {

namespace {

void print_failure(std::ostream& out, const std::string& message) {
  out << "Message: " << message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Compile e^{iH} of a NAND-formula evaluation Hamiltonian into "
               "elementary gates"};
  app.name(args.empty() ? "qfruit" : args.front());

  FruitSpec spec;
  bool no_verify = false;
  int max_verify_qubits = 10;

  app.add_option("--prefix", spec.file_prefix,
                 "Output file prefix: writes <prefix>_qfru_{log,eng,pic}.txt")
      ->required();
  app.add_option("--line-qubits", spec.nb_line, "Line: Number of Qubits")
      ->required();
  app.add_option("--tree-qubits", spec.nb_tree, "Tree: Number of Qubits")
      ->required();
  app.add_option("--coupling", spec.g, "Coupling Constant g")->required();
  app.add_option("--door", spec.door, "Line Door d")->capture_default_str();
  app.add_option("--bands", spec.bands_text,
                 "Bands a1,b1,a2,b2,... marking leaves with x_k = 1");
  app.add_option("--line-trots", spec.nt_line, "Line: Number of Trots")
      ->capture_default_str();
  app.add_option("--line-order", spec.r_line,
                 "Line: Order of Approximant (even)")
      ->capture_default_str();
  app.add_option("--tree-trots", spec.nt_tree, "Tree: Number of Trots")
      ->capture_default_str();
  app.add_option("--meta-trots", spec.nt_meta, "Meta: Number of Trots")
      ->capture_default_str();
  app.add_option("--meta-order", spec.r_meta,
                 "Meta: Order of Approximant (even)")
      ->capture_default_str();
  app.add_flag("--no-verify", no_verify, "Skip the dense error computation");
  app.add_option("--max-verify-qubits", max_verify_qubits,
                 "Largest register for which the error is computed")
      ->capture_default_str();

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1),
                                args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes from the back
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_failure(out, e.what());
    err << app.help();
    return 2;
  }

  try {
    if (spec.file_prefix.empty()) throw InputError("File Prefix must not be empty");
    FruitCompilation result = compile_fruit(spec);
    CompileReport& report = result.report;
    if (no_verify) {
      report.message = "verification skipped (--no-verify)";
    } else if (report.num_qubits > max_verify_qubits) {
      report.message = "verification skipped: " +
                       std::to_string(report.num_qubits) +
                       " qubits exceeds --max-verify-qubits " +
                       std::to_string(max_verify_qubits);
    } else {
      report.error = verify_compile(result.hamiltonians.fruit, result.program);
    }

    const std::string base = spec.file_prefix + "_qfru_";
    write_english(result.program, base + "eng.txt");
    write_picture(result.program, base + "pic.txt");
    write_log(report, spec, base + "log.txt");

    out << "Number of Qubits: " << report.num_qubits << "\n"
        << "Number of Elementary Operations: " << report.num_elementary_ops
        << "\n"
        << "Error: "
        << (report.error ? format_angle(*report.error) : std::string("skipped"))
        << "\n"
        << "Message: " << (report.message.empty() ? "OK" : report.message)
        << "\n";
    return 0;
  } catch (const InputError& e) {
    print_failure(out, e.what());
    return 1;
  } catch (const std::exception& e) {
    print_failure(out, e.what());
    return 3;
  }
}

}  // namespace qfruit
