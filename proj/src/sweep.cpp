#include <qapery/sweep.hpp>

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace qapery {

namespace {

constexpr const char* kFormatTag = "qapery-sweep-v1";

std::string fnv1a64_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

const char* sign_name(SignOpt s) {
    switch (s) {
        case SignOpt::theorem_default: return "default";
        case SignOpt::plus: return "plus";
        case SignOpt::minus: return "minus";
        case SignOpt::both: return "both";
    }
    return "?";
}

std::optional<SignOpt> sign_from_name(const std::string& name) {
    for (SignOpt s : {SignOpt::theorem_default, SignOpt::plus, SignOpt::minus, SignOpt::both})
        if (name == sign_name(s)) return s;
    return std::nullopt;
}

// Pulls a required range, checking presence, nonemptiness and its floor.
class RangeReader {
public:
    RangeReader(const SweepSpec& spec) : spec_(spec) {}

    Range require(const std::string& name, long floor) {
        auto it = spec_.ranges.find(name);
        if (it == spec_.ranges.end())
            throw UsageError("sweep: theorem " + std::string(to_string(spec_.theorem)) +
                             " requires a range for '" + name + "'");
        used_.push_back(name);
        check(name, it->second, floor);
        return it->second;
    }

    Range optional(const std::string& name, long floor, Range fallback) {
        auto it = spec_.ranges.find(name);
        if (it == spec_.ranges.end()) return fallback;
        used_.push_back(name);
        check(name, it->second, floor);
        return it->second;
    }

    void reject_stray() const {
        for (const auto& [name, range] : spec_.ranges) {
            if (std::find(used_.begin(), used_.end(), name) == used_.end())
                throw UsageError("sweep: range '" + name + "' does not apply to theorem " +
                                 to_string(spec_.theorem));
        }
    }

private:
    static void check(const std::string& name, const Range& r, long floor) {
        if (r.lo > r.hi)
            throw UsageError("sweep: empty range for '" + name + "'");
        if (r.lo < floor)
            throw UsageError("sweep: range for '" + name + "' must start at " +
                             std::to_string(floor) + " or above");
    }

    const SweepSpec& spec_;
    std::vector<std::string> used_;
};

}   // namespace

std::vector<Task> enumerate_tasks(const SweepSpec& spec) {
    std::vector<Task> tasks;
    RangeReader ranges(spec);
    const TheoremId id = spec.theorem;
    if (spec.sign != SignOpt::theorem_default && id != TheoremId::T1E1 && id != TheoremId::T1E2)
        throw UsageError("sweep: sign applies only to T1E1/T1E2");

    auto push = [&](TheoremId theorem, std::map<std::string, long> params) {
        tasks.push_back(Task{theorem, std::move(params)});
    };

    switch (id) {
        case TheoremId::T1E1:
        case TheoremId::T1E2: {
            const Range n = ranges.require("n", 1);
            const Range m = ranges.require("m", 1);
            const Range alpha = ranges.require("alpha", 1);
            std::vector<int> signs;
            switch (spec.sign) {
                case SignOpt::theorem_default:
                    signs = {id == TheoremId::T1E1 ? +1 : -1};
                    break;
                case SignOpt::plus:
                    if (id == TheoremId::T1E2) throw UsageError("sweep: T1E2 has sign -1");
                    signs = {+1};
                    break;
                case SignOpt::minus:
                    if (id == TheoremId::T1E1) throw UsageError("sweep: T1E1 has sign +1");
                    signs = {-1};
                    break;
                case SignOpt::both:
                    signs = {+1, -1};
                    break;
            }
            for (int sign : signs)
                for (long nv = n.lo; nv <= n.hi; ++nv)
                    for (long mv = m.lo; mv <= m.hi; ++mv)
                        for (long av = alpha.lo; av <= alpha.hi; ++av)
                            push(sign > 0 ? TheoremId::T1E1 : TheoremId::T1E2,
                                 {{"n", nv}, {"m", mv}, {"alpha", av}});
            break;
        }
        case TheoremId::QT_PLUS:
        case TheoremId::QT_MINUS: {
            const Range n = ranges.require("n", 1);
            const Range m = ranges.require("m", 1);
            const Range alpha = ranges.require("alpha", 1);
            for (long nv = n.lo; nv <= n.hi; ++nv)
                for (long mv = m.lo; mv <= m.hi; ++mv)
                    for (long av = alpha.lo; av <= alpha.hi; ++av)
                        push(id, {{"n", nv}, {"m", mv}, {"alpha", av}});
            break;
        }
        case TheoremId::QLUCAS: {
            const Range d = ranges.require("d", 2);
            const Range a = ranges.require("a", 0);
            const Range h = ranges.require("h", 0);
            const Range b = ranges.optional("b", 0, Range{0, std::numeric_limits<long>::max()});
            const Range l = ranges.optional("l", 0, Range{0, std::numeric_limits<long>::max()});
            for (long dv = d.lo; dv <= d.hi; ++dv)
                for (long av = a.lo; av <= a.hi; ++av)
                    for (long hv = h.lo; hv <= h.hi; ++hv)
                        for (long bv = b.lo; bv <= std::min(b.hi, dv - 1); ++bv)
                            for (long lv = l.lo; lv <= std::min(l.hi, dv - 1); ++lv)
                                push(id, {{"a", av}, {"b", bv}, {"h", hv}, {"l", lv}, {"d", dv}});
            break;
        }
        case TheoremId::CYC_LEMMA: {
            const Range d = ranges.require("d", 2);
            for (long dv = d.lo; dv <= d.hi; ++dv) push(id, {{"d", dv}});
            break;
        }
        case TheoremId::SUN_FORMULA:
        case TheoremId::GUO_ZENG:
        case TheoremId::SUN_DELANNOY: {
            const Range n = ranges.require("n", 1);
            for (long nv = n.lo; nv <= n.hi; ++nv) push(id, {{"n", nv}});
            break;
        }
        case TheoremId::CANCELLATION: {
            const Range b = ranges.require("b", 0);
            for (long bv = b.lo; bv <= b.hi; ++bv) push(id, {{"b", bv}});
            break;
        }
        case TheoremId::B_SYMMETRY: {
            const Range a = ranges.require("a", 0);
            const Range d = ranges.require("d", 2);
            const Range alpha = ranges.require("alpha", 1);
            const Range b = ranges.optional("b", 0, Range{0, std::numeric_limits<long>::max()});
            for (long av = a.lo; av <= a.hi; ++av)
                for (long dv = d.lo; dv <= d.hi; ++dv)
                    for (long bv = b.lo; bv <= std::min(b.hi, dv - 1); ++bv)
                        for (long ev = alpha.lo; ev <= alpha.hi; ++ev)
                            push(id, {{"a", av}, {"b", bv}, {"d", dv}, {"alpha", ev}});
            break;
        }
        case TheoremId::SUPERCONG: {
            const Range p = ranges.require("p", 3);
            for (long pv = p.lo; pv <= p.hi; ++pv)
                if (pv % 2 != 0 && is_prime(pv)) push(id, {{"p", pv}});
            break;
        }
        case TheoremId::DELANNOY_POWER_CONJ: {
            const Range n = ranges.require("n", 1);
            const Range m = ranges.require("m", 1);
            for (long nv = n.lo; nv <= n.hi; ++nv)
                for (long mv = m.lo; mv <= m.hi; ++mv) push(id, {{"n", nv}, {"m", mv}});
            break;
        }
    }
    ranges.reject_stray();
    return tasks;
}

Json canonical_spec_json(const SweepSpec& spec) {
    Json ranges = Json::object();
    for (const auto& [name, r] : spec.ranges) ranges[name] = Json::array({r.lo, r.hi});
    return Json{{"theorem", to_string(spec.theorem)},
                {"sign", sign_name(spec.sign)},
                {"ranges", std::move(ranges)},
                {"deterministic", spec.deterministic},
                {"emit_quotients", spec.emit_quotients}};
}

std::string spec_hash(const SweepSpec& spec) { return fnv1a64_hex(canonical_spec_json(spec).dump()); }

std::optional<SweepSpec> spec_from_canonical_json(const Json& j) {
    try {
        SweepSpec spec;
        auto theorem = theorem_from_string(j.at("theorem").get<std::string>());
        auto sign = sign_from_name(j.at("sign").get<std::string>());
        if (!theorem || !sign) return std::nullopt;
        spec.theorem = *theorem;
        spec.sign = *sign;
        for (const auto& [name, arr] : j.at("ranges").items())
            spec.ranges[name] = Range{arr.at(0).get<long>(), arr.at(1).get<long>()};
        spec.deterministic = j.at("deterministic").get<bool>();
        spec.emit_quotients = j.at("emit_quotients").get<bool>();
        return spec;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

namespace {

long param(const Task& t, const char* name) { return t.params.at(name); }

}   // namespace

VerificationReport dispatch_task(const Task& t, VerifyContext& ctx) {
    switch (t.theorem) {
        case TheoremId::T1E1:
            return verify_integer_sum(param(t, "n"), param(t, "m"), param(t, "alpha"), +1, ctx);
        case TheoremId::T1E2:
            return verify_integer_sum(param(t, "n"), param(t, "m"), param(t, "alpha"), -1, ctx);
        case TheoremId::QT_PLUS:
            return verify_q_sum_plus(param(t, "n"), param(t, "m"), param(t, "alpha"), ctx);
        case TheoremId::QT_MINUS:
            return verify_q_sum_minus(param(t, "n"), param(t, "m"), param(t, "alpha"), ctx);
        case TheoremId::QLUCAS:
            return verify_q_lucas(param(t, "a"), param(t, "b"), param(t, "h"), param(t, "l"),
                                  param(t, "d"), ctx);
        case TheoremId::CYC_LEMMA:
            return verify_cyclotomic_lemma(param(t, "d"), ctx);
        case TheoremId::SUN_FORMULA:
            return verify_sun_formula(param(t, "n"), ctx);
        case TheoremId::GUO_ZENG:
            return verify_guo_zeng(param(t, "n"), ctx);
        case TheoremId::SUN_DELANNOY:
            return verify_sun_delannoy(param(t, "n"), ctx);
        case TheoremId::CANCELLATION:
            return verify_cancellation(param(t, "b"));
        case TheoremId::B_SYMMETRY:
            return verify_b_symmetry(param(t, "a"), param(t, "b"), param(t, "d"),
                                     param(t, "alpha"));
        case TheoremId::SUPERCONG:
            return verify_supercongruence(param(t, "p"), ctx);
        case TheoremId::DELANNOY_POWER_CONJ:
            return explore_delannoy_power(param(t, "n"), param(t, "m"), ctx);
    }
    throw std::logic_error("dispatch_task: unknown theorem");
}

namespace {

// Compute tasks [first, tasks.size()) and append their records in task
// order, regardless of worker completion order. Returns false on write
// failure. passing is cleared when any record fails.
bool execute_range(const SweepSpec& spec, const std::vector<Task>& tasks, std::size_t first,
                   std::ofstream& out, VerifyContext& ctx, const Dispatcher& dispatch,
                   bool& passing) {
    auto render = [&](const Task& task) {
        const VerificationReport report = dispatch(task, ctx);
        return std::pair<std::string, bool>(
            report_to_json(report, !spec.deterministic, spec.emit_quotients).dump(),
            report.passed());
    };

    const std::size_t total = tasks.size();
    if (spec.workers <= 1) {
        for (std::size_t i = first; i < total; ++i) {
            auto [line, ok] = render(tasks[i]);
            if (!ok) passing = false;
            out << line << '\n' << std::flush;
            if (!out) return false;
        }
        return true;
    }

    std::mutex mu;
    std::condition_variable ready;
    std::map<std::size_t, std::pair<std::string, bool>> done;
    std::atomic<std::size_t> next{first};
    std::exception_ptr error;

    auto work = [&] {
        try {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= total) return;
                auto result = render(tasks[i]);
                std::lock_guard<std::mutex> lock(mu);
                done.emplace(i, std::move(result));
                ready.notify_all();
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
            next.store(total);
            ready.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < spec.workers; ++w) pool.emplace_back(work);

    bool write_ok = true;
    {
        std::unique_lock<std::mutex> lock(mu);
        for (std::size_t want = first; want < total; ++want) {
            ready.wait(lock, [&] { return done.count(want) != 0 || error != nullptr; });
            if (error) break;
            auto node = done.extract(want);
            lock.unlock();
            if (!node.mapped().second) passing = false;
            out << node.mapped().first << '\n' << std::flush;
            if (!out) {
                write_ok = false;
                next.store(total);   // stop issuing work
            }
            lock.lock();
            if (!write_ok) break;
        }
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return write_ok;
}

}   // namespace

int run_sweep(const SweepSpec& spec, VerifyContext& ctx, const Dispatcher& dispatch) {
    std::vector<Task> tasks;
    try {
        tasks = enumerate_tasks(spec);
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    std::ofstream out(spec.out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot open output file: " << spec.out_path << '\n';
        return kExitIo;
    }
    const Json header{{"format", kFormatTag},
                      {"spec", canonical_spec_json(spec)},
                      {"spec_hash", spec_hash(spec)}};
    out << header.dump() << '\n' << std::flush;
    if (!out) {
        std::cerr << "write failure: " << spec.out_path << '\n';
        return kExitIo;
    }
    bool passing = true;
    if (!execute_range(spec, tasks, 0, out, ctx, dispatch, passing)) {
        std::cerr << "write failure: " << spec.out_path << '\n';
        return kExitIo;
    }
    return passing ? kExitOk : kExitMathFail;
}

namespace {

bool record_matches(const Json& record, const Task& task) {
    auto theorem = record.find("theorem");
    auto params = record.find("params");
    auto status = record.find("status");
    if (theorem == record.end() || params == record.end() || status == record.end()) return false;
    if (theorem->get<std::string>() != to_string(task.theorem)) return false;
    if (!params->is_object() || params->size() != task.params.size()) return false;
    for (const auto& [name, value] : task.params) {
        auto it = params->find(name);
        if (it == params->end() || !it->is_number_integer() || it->get<long>() != value)
            return false;
    }
    const std::string s = status->get<std::string>();
    return s == "pass" || s == "fail" || s == "conjecture_pass" || s == "conjecture_fail";
}

bool record_passed(const Json& record) {
    const std::string s = record.at("status").get<std::string>();
    return s == "pass" || s == "conjecture_pass";
}

}   // namespace

int resume_sweep(const std::string& path, VerifyContext& ctx,
                 const std::optional<SweepSpec>& expected, int workers,
                 const Dispatcher& dispatch) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "resume: cannot read " << path << '\n';
        return kExitUsage;
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();

    // Split into complete lines; a final fragment without its newline is a
    // partial write and is dropped.
    std::vector<std::pair<std::string, std::size_t>> lines;   // text, end offset
    std::size_t pos = 0;
    while (pos < content.size()) {
        const std::size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) break;
        lines.emplace_back(content.substr(pos, nl - pos), nl + 1);
        pos = nl + 1;
    }
    if (lines.empty()) {
        std::cerr << "resume: no header line in " << path << '\n';
        return kExitUsage;
    }

    Json header = Json::parse(lines[0].first, nullptr, false);
    if (header.is_discarded() || header.value("format", "") != kFormatTag ||
        !header.contains("spec") || !header.contains("spec_hash")) {
        std::cerr << "resume: unrecognized header in " << path << '\n';
        return kExitUsage;
    }
    const std::string recorded_hash = header.at("spec_hash").get<std::string>();
    if (fnv1a64_hex(header.at("spec").dump()) != recorded_hash) {
        std::cerr << "resume: spec hash mismatch in " << path << '\n';
        return kExitUsage;
    }
    auto spec = spec_from_canonical_json(header.at("spec"));
    if (!spec) {
        std::cerr << "resume: malformed spec in " << path << '\n';
        return kExitUsage;
    }
    if (expected && spec_hash(*expected) != recorded_hash) {
        std::cerr << "resume: spec hash mismatch: file was written by a different sweep\n";
        return kExitUsage;
    }
    spec->out_path = path;
    spec->workers = std::max(1, workers);

    std::vector<Task> tasks;
    try {
        tasks = enumerate_tasks(*spec);
    } catch (const UsageError& e) {
        std::cerr << "resume: " << e.what() << '\n';
        return kExitUsage;
    }

    // Validate completed records against the expected task order. A bad
    // line is recoverable only if nothing follows it.
    bool passing = true;
    std::size_t completed = 0;
    std::size_t keep_bytes = lines[0].second;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Json record = Json::parse(lines[i].first, nullptr, false);
        const bool ok = !record.is_discarded() && completed < tasks.size() &&
                        record_matches(record, tasks[completed]);
        if (!ok) {
            if (i + 1 != lines.size()) {
                std::cerr << "resume: corrupt record at line " << (i + 1) << " of " << path << '\n';
                return kExitUsage;
            }
            break;   // corrupt trailing line: truncate and recompute it
        }
        if (!record_passed(record)) passing = false;
        ++completed;
        keep_bytes = lines[i].second;
    }

    std::error_code ec;
    std::filesystem::resize_file(path, keep_bytes, ec);
    if (ec) {
        std::cerr << "resume: cannot truncate " << path << ": " << ec.message() << '\n';
        return kExitIo;
    }
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) {
        std::cerr << "resume: cannot append to " << path << '\n';
        return kExitIo;
    }
    if (!execute_range(*spec, tasks, completed, out, ctx, dispatch, passing)) {
        std::cerr << "write failure: " << path << '\n';
        return kExitIo;
    }
    return passing ? kExitOk : kExitMathFail;
}

}  // namespace qapery
