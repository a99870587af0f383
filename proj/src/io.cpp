// Copyright 2026 The witgeom Authors
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

#include "witgeom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace witgeom::io {

using nlohmann::json;

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void append_complex(std::string &out, cplx z) {
    out += '[';
    out += format_double(z.real());
    out += ", ";
    out += format_double(z.imag());
    out += ']';
}

void append_dims(std::string &out, const std::vector<int> &dims) {
    out += '[';
    for (std::size_t i = 0; i < dims.size(); i++) {
        out += (i ? ", " : "") + std::to_string(dims[i]);
    }
    out += ']';
}

void append_matrix(std::string &out, const CMatrix &m, const SystemShape &shape) {
    out += "{\"dims\": ";
    append_dims(out, shape.dims());
    out += ", \"entries\": [";
    const auto e = m.entries();
    for (std::size_t i = 0; i < e.size(); i++) {
        if (i) {
            out += ", ";
        }
        append_complex(out, e[i]);
    }
    out += "]}";
}

cplx parse_complex(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError("expected a [re, im] pair, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<int> parse_dims(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("dims must be a nonempty list of integers");
    }
    std::vector<int> dims;
    for (const auto &d : j) {
        if (!d.is_number_integer()) {
            throw InputError("dims must be a nonempty list of integers");
        }
        dims.push_back(d.get<int>());
    }
    return dims;
}

}  // namespace

std::string matrix_to_json(const CMatrix &m, const SystemShape &shape) {
    if (shape.total() != m.dim()) {
        throw InputError("matrix_to_json: shape does not match the matrix dimension");
    }
    std::string out;
    append_matrix(out, m, shape);
    out += '\n';
    return out;
}

CMatrix matrix_from_json(const std::string &text, SystemShape *shape_out) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("entries")) {
        throw InputError("matrix document needs \"dims\" and \"entries\"");
    }
    SystemShape shape(parse_dims(doc["dims"]));
    const json &entries = doc["entries"];
    const std::size_t n = shape.total();
    if (!entries.is_array() || entries.size() != n * n) {
        throw InputError("matrix document: expected " + std::to_string(n * n) + " entries");
    }
    std::vector<cplx> values;
    values.reserve(n * n);
    for (const auto &z : entries) {
        values.push_back(parse_complex(z));
    }
    if (shape_out) {
        *shape_out = shape;
    }
    return CMatrix(n, std::move(values));
}

std::string decomposition_to_json(const WitnessDecomposition &dec) {
    std::string out = "{\"dims\": ";
    append_dims(out, dec.shape.dims());
    out += ", \"identity_coeff\": " + format_double(dec.identity_coeff) + ", \"settings\": [";
    for (std::size_t s = 0; s < dec.settings.size(); s++) {
        const auto &ws = dec.settings[s];
        out += s ? ",\n  " : "\n  ";
        out += "{\"label\": " + json(ws.label).dump() + ", \"weight\": " + format_double(ws.weight) +
               ", \"party_bases\": [";
        const auto &bases = ws.setting.party_bases();
        for (std::size_t p = 0; p < bases.size(); p++) {
            out += p ? ", [" : "[";
            for (std::size_t k = 0; k < bases[p].size(); k++) {
                if (k) {
                    out += ", ";
                }
                append_matrix(out, bases[p][k], SystemShape({static_cast<int>(bases[p][k].dim())}));
            }
            out += ']';
        }
        out += "], \"outcome_weights\": [";
        const auto &w = ws.setting.weights();
        for (std::size_t k = 0; k < w.size(); k++) {
            out += (k ? ", " : "") + format_double(w[k]);
        }
        out += "]}";
    }
    out += "\n]}\n";
    return out;
}

UpbSet upb_from_json(const std::string &text) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("shape") || !doc.contains("vectors")) {
        throw InputError("UPB document needs \"shape\" and \"vectors\"");
    }
    SystemShape shape(parse_dims(doc["shape"]));
    if (!doc["vectors"].is_array()) {
        throw InputError("UPB document: \"vectors\" must be a list");
    }
    std::vector<ProductProjection> vectors;
    for (const auto &v : doc["vectors"]) {
        if (!v.is_array() || static_cast<int>(v.size()) != shape.parties()) {
            throw InputError("UPB document: each vector needs one factor per party");
        }
        std::vector<CVector> locals;
        for (const auto &f : v) {
            if (!f.is_array()) {
                throw InputError("UPB document: factor must be a list of [re, im] pairs");
            }
            CVector local;
            for (const auto &z : f) {
                local.push_back(parse_complex(z));
            }
            locals.push_back(std::move(local));
        }
        vectors.emplace_back(std::move(locals));
    }
    return UpbSet(std::move(shape), std::move(vectors));
}

std::string upb_to_json(const UpbSet &upb) {
    std::string out = "{\"shape\": ";
    append_dims(out, upb.shape().dims());
    out += ", \"vectors\": [";
    for (std::size_t i = 0; i < upb.vectors().size(); i++) {
        out += i ? ",\n  [" : "\n  [";
        const auto &locals = upb.vectors()[i].locals;
        for (std::size_t p = 0; p < locals.size(); p++) {
            out += p ? ", [" : "[";
            for (std::size_t k = 0; k < locals[p].size(); k++) {
                if (k) {
                    out += ", ";
                }
                append_complex(out, locals[p][k]);
            }
            out += ']';
        }
        out += ']';
    }
    out += "\n]}\n";
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << contents;
}

}  // namespace witgeom::io
