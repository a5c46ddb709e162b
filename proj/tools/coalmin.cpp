/*
 * Copyright 2026 The coalmin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// coalmin: minimize a finite pointed coalgebra.
//
//   coalmin [--no-reach] [--check] [--stats-json] [--allow-block-names] <file|->

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "coalmin/errors.hpp"
#include "coalmin/ingest.hpp"
#include "coalmin/pipeline.hpp"
#include "json.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitConsistency = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw coalmin::InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimize a finite coalgebra: simple quotient, then reachable part."};
    std::string path;
    bool no_reach = false;
    bool check = false;
    bool stats_json = false;
    bool allow_block_names = false;
    app.add_option("input", path, "Input file, or - for standard input")->required();
    app.add_flag("--no-reach", no_reach, "Skip the reachability stage");
    app.add_flag("--check", check, "Verify every block member yields the same quotient edges");
    app.add_flag("--stats-json", stats_json, "Write statistics as one JSON line to standard error");
    app.add_flag("--allow-block-names", allow_block_names, "Accept state names of the form B<digits>");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    coalmin::InputSpec spec;
    try {
        spec = coalmin::parse(read_input(path), coalmin::ParseOptions{allow_block_names});
    } catch (const coalmin::InputError& e) {
        std::cerr << "coalmin: " << path << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const std::overflow_error& e) {
        std::cerr << "coalmin: " << path << ": " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const coalmin::MinimizeResult result = coalmin::minimize(spec, coalmin::MinimizeOptions{!no_reach, check});
        std::cout << coalmin::render_document(spec, result);
        if (stats_json) {
            const auto& st = result.stats;
            const nlohmann::json j = {
                {"states_in", st.states_in},   {"states_out", st.states_out},
                {"edges_in", st.edges_in},     {"edges_out", st.edges_out},
                {"rounds", st.rounds},         {"reachable_dropped", st.reachable_dropped},
                {"wall_ms", st.wall_ms},
            };
            std::cerr << j.dump() << "\n";
        }
    } catch (const coalmin::ConsistencyError& e) {
        std::cerr << "coalmin: internal consistency failure";
        if (e.block() != coalmin::ConsistencyError::npos) std::cerr << " in block B" << e.block();
        std::cerr << ": " << e.what() << "\n";
        return kExitConsistency;
    } catch (const coalmin::EncodingError& e) {
        std::cerr << "coalmin: internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::overflow_error& e) {
        std::cerr << "coalmin: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
