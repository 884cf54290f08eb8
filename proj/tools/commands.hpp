#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unicyclic/bench.hpp"
#include "unicyclic/generator.hpp"

namespace unicyclic::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

enum class Format { Json, Csv };

/// Named matrices `pinv` can print.
enum class Emit { H, MH, HM, QPlus, SPlus };

Format parse_format(std::string_view text);
Emit parse_emit(std::string_view text);
std::string_view to_string(Emit e);

/// "<Class> n=<n> m=<m>[ |C|=<len>]".
int cmd_classify(std::string_view graph_text, std::ostream& out, std::ostream& err);

int cmd_pinv(std::string_view graph_text, Format format, const std::vector<Emit>& emits,
             std::ostream& out, std::ostream& err);

/// Verifies the combinatorial pseudoinverse, or `candidate_json` (a matrix
/// document) when given, and prints a JSON report. Exit 0 iff every check passes.
int cmd_verify(std::string_view graph_text, const std::optional<std::string>& candidate_json,
               std::ostream& out, std::ostream& err);

int cmd_gen(const GenSpec& spec, std::ostream& out, std::ostream& err);

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Full command line (without the program name). Reads "-" inputs from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace unicyclic::cli
