// zzac: filesystem-backed array-code tool. Nodes live under
// root/node_<idx>/chunk.zzac; a failed node is the directory renamed to
// node_<idx>.failed. Payloads are framed with an 8-byte little-endian
// length, expanded to base-q digits (fixed digits per byte), padded to
// whole stripes of p*k digits, and laid out column-major per stripe.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zigzag/analysis.hpp"
#include "zigzag/chunk_io.hpp"
#include "zigzag/constructions.hpp"
#include "zigzag/decode.hpp"
#include "zigzag/rebuild.hpp"
#include "zigzag/spec_io.hpp"

namespace fs = std::filesystem;
using namespace zigzag;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;
constexpr int kExitIo = 4;

int digits_per_byte(int q) {
    int t = 0;
    long long reach = 1;
    while (reach < 256) {
        reach *= q;
        ++t;
    }
    return t;
}

fs::path node_dir(const std::string& root, int idx) {
    return fs::path(root) / ("node_" + std::to_string(idx));
}

fs::path chunk_path(const std::string& root, int idx) {
    return node_dir(root, idx) / "chunk.zzac";
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void check_spec_for_storage(const CodeSpec& spec) {
    if (spec.field.q() > 256)
        throw CapabilityExceeded("chunk storage needs q <= 256 (one byte per element)");
}

// payload framing + digit expansion
std::vector<std::uint8_t> bytes_to_digits(const std::vector<std::uint8_t>& data, int q) {
    std::vector<std::uint8_t> framed;
    const std::uint64_t len = data.size();
    for (int i = 0; i < 8; ++i) framed.push_back(static_cast<std::uint8_t>((len >> (8 * i)) & 0xff));
    framed.insert(framed.end(), data.begin(), data.end());

    const int t = digits_per_byte(q);
    std::vector<std::uint8_t> digits;
    digits.reserve(framed.size() * t);
    for (std::uint8_t b : framed) {
        int v = b;
        std::vector<std::uint8_t> d(t);
        for (int i = t - 1; i >= 0; --i) {
            d[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        digits.insert(digits.end(), d.begin(), d.end());
    }
    return digits;
}

std::vector<std::uint8_t> digits_to_bytes(const std::vector<std::uint8_t>& digits, int q) {
    const int t = digits_per_byte(q);
    std::vector<std::uint8_t> bytes;
    for (size_t i = 0; i + t <= digits.size(); i += t) {
        int v = 0;
        for (int d = 0; d < t; ++d) v = v * q + digits[i + d];
        if (v > 255) throw IoError("digit group out of byte range");
        bytes.push_back(static_cast<std::uint8_t>(v));
    }
    if (bytes.size() < 8) throw IoError("payload shorter than its length frame");
    std::uint64_t len = 0;
    for (int i = 0; i < 8; ++i) len |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    if (len > bytes.size() - 8) throw IoError("corrupt payload length frame");
    return {bytes.begin() + 8, bytes.begin() + 8 + static_cast<long>(len)};
}

struct NodeState {
    std::optional<std::vector<std::uint8_t>> body;  // present chunk body
    bool failed = false;
};

struct ArrayState {
    std::vector<NodeState> nodes;
    std::uint32_t stripes = 0;
};

ArrayState scan_root(const CodeSpec& spec, const std::string& root) {
    ArrayState st;
    st.nodes.resize(spec.n());
    for (int i = 0; i < spec.n(); ++i) {
        const fs::path p = chunk_path(root, i);
        if (fs::exists(p)) {
            auto [header, body] = read_chunk(p.string());
            if (header.p != spec.p || header.q != spec.field.q() || header.column_index != i)
                throw IoError("chunk header does not match spec: " + p.string());
            if (st.stripes == 0) st.stripes = header.stripe_count;
            if (header.stripe_count != st.stripes)
                throw IoError("inconsistent stripe counts under " + root);
            st.nodes[i].body = std::move(body);
        } else if (fs::exists(node_dir(root, i).string() + ".failed")) {
            st.nodes[i].failed = true;
        } else {
            throw IoError("node " + std::to_string(i) + " missing under " + root);
        }
    }
    if (st.stripes == 0) throw IoError("no chunks found under " + root);
    return st;
}

CodeArray stripe_array(const CodeSpec& spec, const ArrayState& st, std::uint32_t s) {
    CodeArray arr;
    arr.info.assign(spec.p, std::vector<int>(spec.k(), 0));
    arr.parity.assign(spec.p, std::vector<int>(spec.r, 0));
    for (int i = 0; i < spec.n(); ++i) {
        if (!st.nodes[i].body) {
            arr.erased.insert(i);
            continue;
        }
        const auto& body = *st.nodes[i].body;
        for (int x = 0; x < spec.p; ++x) {
            const int v = body[static_cast<size_t>(s) * spec.p + x];
            if (i < spec.k())
                arr.info[x][i] = v;
            else
                arr.parity[x][i - spec.k()] = v;
        }
    }
    return arr;
}

void write_node(const CodeSpec& spec, const std::string& root, int idx,
                const std::vector<std::uint8_t>& body, std::uint32_t stripes) {
    fs::create_directories(node_dir(root, idx));
    ChunkHeader h;
    h.q = spec.field.q();
    h.column_index = idx;
    h.column_type = idx < spec.k() ? 0 : 1;
    h.p = spec.p;
    h.stripe_count = stripes;
    write_chunk(chunk_path(root, idx).string(), h, body);
}

int cmd_gen(const std::string& kind, int m, int r, int s, int q, std::optional<int> alpha,
            std::uint64_t seed, const std::string& spec_path) {
    CodeSpec spec = [&] {
        if (kind == "optimal-r2") return build_optimal_r2(m);
        if (kind == "dup") return build_duplication(build_optimal_r2(m), s, q);
        if (kind == "weight3") return build_weight3(m, q);
        if (kind == "optimal-general") return build_optimal_general(m, r, q, alpha);
        if (kind == "random-coeff") {
            std::vector<RVector> vecs;
            for (int i = 0; i <= m; ++i) vecs.push_back(RVector::unit(r, m, i));
            return assign_coefficients_random(build_from_vectors(vecs, r, m), q, seed, 1000);
        }
        throw InvalidArgument("unknown construction: " + kind);
    }();
    save_spec(spec, spec_path);
    const Rational ratio = ratio_formula(spec);
    std::cout << "name " << spec.name << "\n"
              << "k " << spec.k() << " r " << spec.r << " p " << spec.p << "\n"
              << "field GF(" << spec.field.q() << ")\n"
              << "ratio " << ratio.str() << " = " << ratio.to_double() << "\n";
    return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& root, const std::string& input) {
    const CodeSpec spec = load_spec(spec_path);
    check_spec_for_storage(spec);
    const int q = spec.field.q(), p = spec.p, k = spec.k();
    std::vector<std::uint8_t> digits = bytes_to_digits(read_file(input), q);
    const size_t stripe_digits = static_cast<size_t>(p) * k;
    while (digits.size() % stripe_digits != 0) digits.push_back(0);
    const std::uint32_t stripes = static_cast<std::uint32_t>(digits.size() / stripe_digits);

    std::vector<std::vector<std::uint8_t>> bodies(spec.n());
    for (auto& b : bodies) b.resize(static_cast<size_t>(p) * stripes);
    for (std::uint32_t s = 0; s < stripes; ++s) {
        std::vector<std::vector<int>> info(p, std::vector<int>(k, 0));
        for (int j = 0; j < k; ++j)
            for (int x = 0; x < p; ++x) {
                const std::uint8_t d = digits[s * stripe_digits + static_cast<size_t>(j) * p + x];
                info[x][j] = d;
                bodies[j][static_cast<size_t>(s) * p + x] = d;
            }
        const auto parity = encode(spec, info);
        for (int l = 0; l < spec.r; ++l)
            for (int x = 0; x < p; ++x)
                bodies[k + l][static_cast<size_t>(s) * p + x] =
                    static_cast<std::uint8_t>(parity[x][l]);
    }
    for (int i = 0; i < spec.n(); ++i) write_node(spec, root, i, bodies[i], stripes);
    std::cout << "encoded " << input << ": " << stripes << " stripes, " << spec.n()
              << " nodes under " << root << "\n";
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& root, const std::string& output) {
    const CodeSpec spec = load_spec(spec_path);
    check_spec_for_storage(spec);
    ArrayState st = scan_root(spec, root);
    int missing = 0;
    for (const NodeState& n : st.nodes) missing += n.body ? 0 : 1;
    if (missing > spec.r)
        throw CapabilityExceeded("more failed nodes than parities: cannot decode");

    const size_t stripe_digits = static_cast<size_t>(spec.p) * spec.k();
    std::vector<std::uint8_t> digits(stripe_digits * st.stripes);
    for (std::uint32_t s = 0; s < st.stripes; ++s) {
        CodeArray arr = stripe_array(spec, st, s);
        if (!arr.erased.empty()) decode_erasures(spec, arr);
        for (int j = 0; j < spec.k(); ++j)
            for (int x = 0; x < spec.p; ++x)
                digits[s * stripe_digits + static_cast<size_t>(j) * spec.p + x] =
                    static_cast<std::uint8_t>(arr.info[x][j]);
    }
    const std::vector<std::uint8_t> payload = digits_to_bytes(digits, spec.field.q());
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + output);
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("write failed: " + output);
    std::cout << "decoded " << payload.size() << " bytes to " << output << "\n";
    return 0;
}

int cmd_fail(const std::string& root, const std::vector<int>& nodes) {
    for (int i : nodes) {
        const fs::path from = node_dir(root, i);
        if (!fs::exists(from)) throw IoError("no such node directory: " + from.string());
        fs::rename(from, fs::path(from.string() + ".failed"));
        std::cout << "failed node " << i << "\n";
    }
    return 0;
}

int cmd_rebuild(const std::string& spec_path, const std::string& root) {
    const CodeSpec spec = load_spec(spec_path);
    check_spec_for_storage(spec);
    ArrayState st = scan_root(spec, root);
    std::vector<int> failed;
    for (int i = 0; i < spec.n(); ++i)
        if (!st.nodes[i].body) failed.push_back(i);
    if (failed.empty()) {
        std::cout << "nothing to rebuild\n";
        return 0;
    }
    if (static_cast<int>(failed.size()) > spec.r)
        throw CapabilityExceeded("more failed nodes than parities");

    const bool all_systematic =
        failed.back() < spec.k();  // failed is ascending
    std::vector<long long> per_node(spec.n(), 0);
    std::vector<std::vector<std::uint8_t>> restored(failed.size());
    for (auto& b : restored) b.resize(static_cast<size_t>(spec.p) * st.stripes);

    if (all_systematic) {
        const RebuildPlan plan = plan_rebuild(spec, failed);
        const AccessReport rep = access_report(spec, plan);
        for (int i = 0; i < spec.n(); ++i) per_node[i] = rep.per_node[i] * st.stripes;
        for (std::uint32_t s = 0; s < st.stripes; ++s) {
            CodeArray arr = stripe_array(spec, st, s);
            execute_rebuild(spec, plan, arr);
            for (size_t fi = 0; fi < failed.size(); ++fi)
                for (int x = 0; x < spec.p; ++x)
                    restored[fi][static_cast<size_t>(s) * spec.p + x] =
                        static_cast<std::uint8_t>(arr.info[x][failed[fi]]);
        }
    } else {
        // parity (or mixed) failures go through full decoding
        const bool parity_only = failed.front() >= spec.k();
        for (int i = 0; i < spec.n(); ++i) {
            if (!st.nodes[i].body) continue;
            if (parity_only && i >= spec.k()) continue;  // re-encoding reads no parity
            per_node[i] = static_cast<long long>(spec.p) * st.stripes;
        }
        for (std::uint32_t s = 0; s < st.stripes; ++s) {
            CodeArray arr = stripe_array(spec, st, s);
            decode_erasures(spec, arr);
            for (size_t fi = 0; fi < failed.size(); ++fi) {
                const int idx = failed[fi];
                for (int x = 0; x < spec.p; ++x)
                    restored[fi][static_cast<size_t>(s) * spec.p + x] = static_cast<std::uint8_t>(
                        idx < spec.k() ? arr.info[x][idx] : arr.parity[x][idx - spec.k()]);
            }
        }
    }

    for (size_t fi = 0; fi < failed.size(); ++fi)
        write_node(spec, root, failed[fi], restored[fi], st.stripes);

    long long total = 0;
    for (int i = 0; i < spec.n(); ++i) {
        if (!st.nodes[i].body) continue;
        std::cout << "node " << i << " bytes read " << per_node[i] << "\n";
        total += per_node[i];
    }
    const long long surviving = static_cast<long long>(spec.p) * st.stripes *
                                (spec.n() - static_cast<int>(failed.size()));
    const Rational ratio(total, surviving);
    std::cout << "total bytes read " << total << " of " << surviving << "\n"
              << "ratio " << ratio.str() << " = " << ratio.to_double() << "\n";
    return 0;
}

int cmd_scrub(const std::string& spec_path, const std::string& root) {
    const CodeSpec spec = load_spec(spec_path);
    check_spec_for_storage(spec);
    ArrayState st = scan_root(spec, root);
    for (const NodeState& n : st.nodes)
        if (!n.body) throw CapabilityExceeded("scrub requires all nodes present");

    std::set<int> corrected;
    std::vector<CodeArray> fixed;
    fixed.reserve(st.stripes);
    for (std::uint32_t s = 0; s < st.stripes; ++s) {
        CodeArray arr = stripe_array(spec, st, s);
        if (spec.r == 2) {
            const ErrorDecodeResult res = decode_error(spec, arr);
            if (res.status == ErrorDecodeStatus::MultipleErrors ||
                res.status == ErrorDecodeStatus::Ambiguous) {
                std::cout << "alarm: stripe " << s << " has uncorrectable errors\n";
                return kExitVerifyFail;
            }
            if (res.status == ErrorDecodeStatus::Corrected) corrected.insert(res.column);
        } else {
            if (!compute_syndrome(spec, arr).clean()) {
                std::cout << "alarm: stripe " << s << " fails syndrome check\n";
                return kExitVerifyFail;
            }
        }
        fixed.push_back(std::move(arr));
    }
    if (corrected.empty()) {
        std::cout << "clean\n";
        return 0;
    }
    for (int idx : corrected) {
        std::vector<std::uint8_t> body(static_cast<size_t>(spec.p) * st.stripes);
        for (std::uint32_t s = 0; s < st.stripes; ++s)
            for (int x = 0; x < spec.p; ++x)
                body[static_cast<size_t>(s) * spec.p + x] = static_cast<std::uint8_t>(
                    idx < spec.k() ? fixed[s].info[x][idx] : fixed[s].parity[x][idx - spec.k()]);
        write_node(spec, root, idx, body, st.stripes);
        std::cout << "corrected column " << idx << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& spec_path) {
    const CodeSpec spec = load_spec(spec_path);
    const MdsReport rep = verify_mds(spec);
    if (rep.mds) {
        std::cout << "mds: pass\n";
        return 0;
    }
    std::cout << "mds: fail, witness erasure set " << rep.witness_str() << "\n";
    return kExitVerifyFail;
}

int cmd_ratio(const std::string& spec_path, int e) {
    const CodeSpec spec = load_spec(spec_path);
    const Rational measured = measure_ratio(spec, e);
    std::cout << "measured(e=" << e << ") " << measured.str() << " = " << measured.to_double()
              << "\n";
    if (e == 1) {
        const Rational formula = ratio_formula(spec);
        std::cout << "formula " << formula.str() << " = " << formula.to_double() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzag array-code storage tool"};
    app.require_subcommand(1);

    std::string spec_path, root, input, output, kind;
    int m = 2, r = 2, s = 1, q = 3, e = 1;
    std::optional<int> alpha;
    std::uint64_t seed = 1;
    std::vector<int> nodes;

    auto* gen = app.add_subcommand("gen", "generate a code spec");
    gen->add_option("construction", kind,
                    "optimal-r2 | dup | weight3 | optimal-general | random-coeff")
        ->required();
    gen->add_option("--spec", spec_path, "output spec path")->required();
    gen->add_option("--m", m);
    gen->add_option("--r", r);
    gen->add_option("--s", s);
    gen->add_option("--q", q);
    gen->add_option("--alpha", alpha);
    gen->add_option("--seed", seed);

    auto* enc = app.add_subcommand("encode", "shard a file into node chunks");
    enc->add_option("--spec", spec_path)->required();
    enc->add_option("--root", root)->required();
    enc->add_option("input", input, "input file")->required();

    auto* dec = app.add_subcommand("decode", "reassemble the original file");
    dec->add_option("--spec", spec_path)->required();
    dec->add_option("--root", root)->required();
    dec->add_option("output", output, "output file")->required();

    auto* fail = app.add_subcommand("fail", "mark nodes as failed");
    fail->add_option("--root", root)->required();
    fail->add_option("nodes", nodes, "node indices")->required();

    auto* reb = app.add_subcommand("rebuild", "rebuild failed nodes");
    reb->add_option("--spec", spec_path)->required();
    reb->add_option("--root", root)->required();

    auto* scrub = app.add_subcommand("scrub", "check and correct column errors");
    scrub->add_option("--spec", spec_path)->required();
    scrub->add_option("--root", root)->required();

    auto* verify = app.add_subcommand("verify", "exhaustive MDS check");
    verify->add_option("--spec", spec_path)->required();

    auto* ratio = app.add_subcommand("ratio", "rebuilding-ratio report");
    ratio->add_option("--spec", spec_path)->required();
    ratio->add_option("--e", e, "erasures per set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(kind, m, r, s, q, alpha, seed, spec_path);
        if (enc->parsed()) return cmd_encode(spec_path, root, input);
        if (dec->parsed()) return cmd_decode(spec_path, root, output);
        if (fail->parsed()) return cmd_fail(root, nodes);
        if (reb->parsed()) return cmd_rebuild(spec_path, root);
        if (scrub->parsed()) return cmd_scrub(spec_path, root);
        if (verify->parsed()) return cmd_verify(spec_path);
        if (ratio->parsed()) return cmd_ratio(spec_path, e);
    } catch (const CapabilityExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCapability;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIo;
    } catch (const InvalidArgument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
