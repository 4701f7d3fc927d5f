#include "zigzag/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace zigzag {

namespace {

const char* kind_name(CodeKind k) {
    switch (k) {
        case CodeKind::OptimalR2: return "optimal-r2";
        case CodeKind::Duplication: return "duplication";
        case CodeKind::Weight3: return "weight3";
        case CodeKind::OptimalGeneral: return "optimal-general";
        default: return "generic";
    }
}

CodeKind kind_of(const std::string& s) {
    if (s == "optimal-r2") return CodeKind::OptimalR2;
    if (s == "duplication") return CodeKind::Duplication;
    if (s == "weight3") return CodeKind::Weight3;
    if (s == "optimal-general") return CodeKind::OptimalGeneral;
    if (s == "generic") return CodeKind::Generic;
    throw IoError("spec: unknown kind '" + s + "'");
}

std::string expect_key(std::istream& in, const std::string& key) {
    std::string k;
    if (!(in >> k) || k != key) throw IoError("spec: expected key '" + key + "'");
    std::string rest;
    std::getline(in, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    return rest;
}

std::vector<int> ints_of(const std::string& line, size_t expected) {
    std::istringstream ss(line);
    std::vector<int> out;
    int v;
    while (ss >> v) out.push_back(v);
    if (out.size() != expected) throw IoError("spec: wrong value count in line '" + line + "'");
    return out;
}

} // namespace

std::string spec_to_text(const CodeSpec& spec) {
    std::ostringstream out;
    out << "format_version 1\n";
    out << "name " << spec.name << "\n";
    out << "kind " << kind_name(spec.kind) << "\n";
    out << "dup_copies " << spec.dup_copies << "\n";
    out << "base_k " << spec.base_k << "\n";
    out << "verified " << (spec.coefficients_verified ? 1 : 0) << "\n";
    out << "r " << spec.r << "\n";
    out << "m " << spec.m << "\n";
    out << "p " << spec.p << "\n";
    out << "field_p " << spec.field.p() << "\n";
    out << "field_d " << spec.field.d() << "\n";
    out << "field_alpha " << spec.field.alpha() << "\n";
    out << "field_modulus";
    for (int c : spec.field.modulus()) out << " " << c;
    out << "\n";
    out << "k " << spec.k() << "\n";
    for (const ColumnDef& col : spec.columns) {
        out << "column";
        for (int d : col.vector.digits()) out << " " << d;
        out << " " << col.copy_index << " " << (col.modified_sets ? 1 : 0) << "\n";
    }
    for (int l = 0; l < spec.r; ++l)
        for (int i = 0; i < spec.p; ++i) {
            out << "coeff";
            for (const ColumnDef& col : spec.columns) out << " " << col.coeff[l][i];
            out << "\n";
        }
    out << "end\n";
    return out.str();
}

CodeSpec spec_from_text(const std::string& text) {
    std::istringstream in(text);
    if (expect_key(in, "format_version") != "1") throw IoError("spec: unsupported format version");
    CodeSpec spec;
    spec.name = expect_key(in, "name");
    spec.kind = kind_of(expect_key(in, "kind"));
    spec.dup_copies = ints_of(expect_key(in, "dup_copies"), 1)[0];
    spec.base_k = ints_of(expect_key(in, "base_k"), 1)[0];
    spec.coefficients_verified = ints_of(expect_key(in, "verified"), 1)[0] != 0;
    spec.r = ints_of(expect_key(in, "r"), 1)[0];
    spec.m = ints_of(expect_key(in, "m"), 1)[0];
    spec.p = ints_of(expect_key(in, "p"), 1)[0];
    const int fp = ints_of(expect_key(in, "field_p"), 1)[0];
    const int fd = ints_of(expect_key(in, "field_d"), 1)[0];
    const int alpha = ints_of(expect_key(in, "field_alpha"), 1)[0];
    const std::vector<int> modulus = ints_of(expect_key(in, "field_modulus"), fd + 1);
    try {
        spec.field = Field::make(fp, fd, alpha, modulus);
    } catch (const Error& e) {
        throw IoError(std::string("spec: invalid field: ") + e.what());
    }
    const int k = ints_of(expect_key(in, "k"), 1)[0];
    for (int j = 0; j < k; ++j) {
        const std::vector<int> vals = ints_of(expect_key(in, "column"), spec.m + 2);
        std::vector<int> digits(vals.begin(), vals.begin() + spec.m);
        ColumnDef col(RVector(spec.r, digits), vals[spec.m]);
        col.modified_sets = vals[spec.m + 1] != 0;
        col.coeff.assign(spec.r, std::vector<int>(spec.p, 0));
        spec.columns.push_back(std::move(col));
    }
    for (int l = 0; l < spec.r; ++l)
        for (int i = 0; i < spec.p; ++i) {
            const std::vector<int> row = ints_of(expect_key(in, "coeff"), k);
            for (int j = 0; j < k; ++j) spec.columns[j].coeff[l][i] = row[j];
        }
    std::string tail;
    if (!(in >> tail) || tail != "end") throw IoError("spec: missing end marker");
    for (ColumnDef& col : spec.columns) install_rebuild_sets(spec, col);
    try {
        validate(spec);
    } catch (const Error& e) {
        throw IoError(std::string("spec: invalid contents: ") + e.what());
    }
    return spec;
}

void save_spec(const CodeSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << spec_to_text(spec);
    if (!out) throw IoError("write failed: " + path);
}

CodeSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_from_text(buf.str());
}

} // namespace zigzag
