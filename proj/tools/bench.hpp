/*
   Copyright 2026 The gfjnf Authors

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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace bench {

struct Config {
    std::vector<std::size_t> sizes{20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
    std::vector<std::uint32_t> fields{5, 121};
    std::vector<std::string> cases{"cyclic", "irreducible"};
    std::size_t trials = 5;
    std::uint64_t seed = 0;
    std::string csv;  // empty: stdout
};

void add_options(CLI::App* app, Config& c);

/// Writes "field,n,case,path,median_ms,verified" rows; returns the exit status
/// (2 when any trial's paths disagree or fail verification).
int run(const Config& c);

}  // namespace bench
