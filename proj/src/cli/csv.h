// Copyright 2026 The noclick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOCLICK_SRC_CLI_CSV_H
#define NOCLICK_SRC_CLI_CSV_H

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace noclick::cli {

inline constexpr const char *kCsvSchemaVersion = "1";

inline std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string fmt(int x) { return std::to_string(x); }
inline std::string fmt(bool x) { return x ? "true" : "false"; }

class CsvWriter {
  public:
    CsvWriter(std::ostream &os, const std::string &table, const std::vector<std::string> &columns) : os_(os) {
        os_ << "# noclick " << table << " schema v" << kCsvSchemaVersion << "\n";
        row(columns);
    }

    void row(const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << cells[i];
        }
        os_ << '\n';
    }

  private:
    std::ostream &os_;
};

}  // namespace noclick::cli

#endif
