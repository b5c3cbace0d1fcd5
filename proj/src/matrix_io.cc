// Copyright 2026 The bosonlab Authors
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

#include "bosonlab/matrix_io.h"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace bosonlab {

namespace {

bool next_content_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

double parse_double(std::string_view token, const std::string &context) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad number '" + std::string(token) + "' in " + context);
    }
    return v;
}

Complex parse_entry(const std::string &token) {
    auto comma = token.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("matrix entry '" + token + "' is not of the form re,im");
    }
    std::string_view sv(token);
    return {parse_double(sv.substr(0, comma), "matrix entry"), parse_double(sv.substr(comma + 1), "matrix entry")};
}

}  // namespace

void write_matrix(std::ostream &out, const ComplexMatrix &M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("only square matrices are serialized");
    }
    char buf[96];
    out << M.rows() << "\n";
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", M(i, j).real(), M(i, j).imag());
            if (j) {
                out << ' ';
            }
            out << buf;
        }
        out << "\n";
    }
}

ComplexMatrix read_matrix(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) {
        throw std::invalid_argument("missing matrix dimension line");
    }
    std::istringstream head(line);
    long m = -1;
    std::string extra;
    if (!(head >> m) || m < 0 || (head >> extra)) {
        throw std::invalid_argument("bad matrix dimension line '" + line + "'");
    }
    ComplexMatrix M(m, m);
    for (long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) {
            throw std::invalid_argument("matrix ended after " + std::to_string(i) + " rows");
        }
        std::istringstream row(line);
        std::string token;
        long j = 0;
        while (row >> token) {
            if (j >= m) {
                throw std::invalid_argument("too many entries in matrix row " + std::to_string(i));
            }
            M(i, j++) = parse_entry(token);
        }
        if (j != m) {
            throw std::invalid_argument("too few entries in matrix row " + std::to_string(i));
        }
    }
    return M;
}

void write_schedule(std::ostream &out, const HoppingSchedule &sched) {
    char buf[64];
    for (const auto &seg : sched.segments) {
        std::snprintf(buf, sizeof(buf), "%.17g", seg.duration);
        out << buf << "\n";
        write_matrix(out, seg.J);
    }
}

HoppingSchedule read_schedule(std::istream &in) {
    HoppingSchedule sched;
    std::string line;
    while (next_content_line(in, line)) {
        auto first = line.find_first_not_of(" \t");
        auto last = line.find_last_not_of(" \t\r");
        double duration = parse_double(std::string_view(line).substr(first, last - first + 1), "segment duration");
        if (!(duration > 0.0)) {
            throw std::invalid_argument("segment durations must be positive");
        }
        sched.segments.push_back(Segment{duration, read_matrix(in)});
        if (sched.segments.back().J.rows() != sched.segments.front().J.rows()) {
            throw std::invalid_argument("schedule segments have inconsistent sizes");
        }
    }
    return sched;
}

}  // namespace bosonlab
