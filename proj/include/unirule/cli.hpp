/*
   Copyright 2026 The unirule Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNIRULE_CLI_HPP
#define UNIRULE_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unirule/certify.hpp"
#include "unirule/fermat.hpp"

namespace unirule::cli {

enum class Command { Certify, Hasse, Count, FermatScan, Bounds };
enum class OutputFormat { Json, Csv, Text };

/// Settings for one run. Unset fields fall back to defaults at dispatch;
/// when a config file and flags are combined, set flags win.
struct RunConfig {
    std::optional<Command> command;
    std::optional<std::string> field;
    std::optional<unsigned> ambient;
    std::vector<std::string> polys;
    std::optional<std::string> poly_file;
    std::vector<unsigned> degrees;
    std::optional<bool> verify;
    std::optional<SmoothnessMode> smoothness;
    std::optional<unsigned> probe_depth;
    std::optional<std::uint64_t> budget;
    std::optional<unsigned> workers;
    std::optional<std::uint64_t> seed;
    std::optional<OutputFormat> format;
    std::optional<std::string> out;
    std::optional<Range> p_range;
    std::optional<Range> d_range;
    std::optional<Range> n_range;
};

/// Flat "key = value" file; '#' starts a comment. Keys are the long flag
/// names without dashes, plus "command". "poly" may repeat.
/// Throws ConfigSyntax or UnknownKey.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::istream& in, const std::string& origin = "<config>");

/// Fields set in `flags` replace those in `base`.
RunConfig merge(RunConfig base, const RunConfig& flags);

Range parse_range(const std::string& text);

/// Entry point. Exit status: 0 on a completed computation (Inconclusive
/// included), 1 on input errors, 2 on budget or internal-consistency errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace unirule::cli

#endif
