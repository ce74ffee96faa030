#include "lensfr/render.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lensfr {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json summands_json(const SumOfLens& sum) {
    ordered_json arr = ordered_json::array();
    for (const auto& lens : sum.summands()) arr.push_back({{"p", lens.p()}, {"q", lens.q()}});
    return arr;
}

std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace

std::string render_invariant(const LensSpace& lens, bool normalized, OutputFormat fmt) {
    const FramingClass value =
        normalized ? normalized_framing_invariant(lens) : framing_invariant(lens);
    const int64_t q_inv = lens.q_inverse().value();
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Plain:
            os << value << '\n';
            break;
        case OutputFormat::Csv:
            os << "p,q,q_inv,value,normalized\n"
               << lens.p() << ',' << lens.q() << ',' << q_inv << ',' << value.value() << ','
               << (normalized ? "true" : "false") << '\n';
            break;
        case OutputFormat::Json:
            os << dump(ordered_json{{"p", lens.p()},
                                    {"q", lens.q()},
                                    {"q_inv", q_inv},
                                    {"value", value.value()},
                                    {"normalized", normalized}});
            break;
    }
    return os.str();
}

std::string render_table(const std::vector<TableRow>& rows, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Plain:
            os << std::setw(6) << "p" << std::setw(7) << "q" << std::setw(7) << "q_inv"
               << std::setw(10) << "odd_rep_q" << std::setw(13) << "odd_rep_qinv" << std::setw(7)
               << "F" << std::setw(8) << "F_norm" << '\n';
            for (const auto& r : rows) {
                os << std::setw(6) << r.p << std::setw(7) << r.q << std::setw(7) << r.q_inv
                   << std::setw(10) << r.odd_rep_q << std::setw(13) << r.odd_rep_q_inv
                   << std::setw(7) << r.framing << std::setw(8) << r.framing_normalized << '\n';
            }
            break;
        case OutputFormat::Csv:
            os << kTableCsvHeader << '\n';
            for (const auto& r : rows) {
                os << r.p << ',' << r.q << ',' << r.q_inv << ',' << r.odd_rep_q << ','
                   << r.odd_rep_q_inv << ',' << r.framing << ',' << r.framing_normalized << '\n';
            }
            break;
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                arr.push_back({{"p", r.p},
                               {"q", r.q},
                               {"q_inv", r.q_inv},
                               {"odd_rep_q", r.odd_rep_q},
                               {"odd_rep_qinv", r.odd_rep_q_inv},
                               {"F", r.framing},
                               {"F_norm", r.framing_normalized}});
            }
            os << dump(ordered_json{{"rows", std::move(arr)}});
            break;
        }
    }
    return os.str();
}

std::vector<TableRow> parse_table_csv(std::string_view text) {
    std::vector<TableRow> rows;
    bool header_seen = false;
    size_t line_no = 0;
    while (!text.empty()) {
        const size_t nl = text.find('\n');
        const std::string_view line = trim_cr(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!header_seen) {
            if (line != kTableCsvHeader) {
                throw std::runtime_error("unexpected table header: " + std::string(line));
            }
            header_seen = true;
            continue;
        }
        if (line.empty()) continue;

        int64_t fields[7];
        const char* cur = line.data();
        const char* end = line.data() + line.size();
        for (int i = 0; i < 7; ++i) {
            auto [ptr, ec] = std::from_chars(cur, end, fields[i]);
            const bool last = i == 6;
            if (ec != std::errc{} || (last ? ptr != end : (ptr == end || *ptr != ','))) {
                throw std::runtime_error("malformed table row at line " + std::to_string(line_no));
            }
            cur = last ? ptr : ptr + 1;
        }
        rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5], fields[6]});
    }
    if (!header_seen) throw std::runtime_error("empty table");
    return rows;
}

std::string render_verification(const VerificationReport& report, int64_t max_p,
                                 OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Plain:
            os << "verify max_p=" << max_p << '\n'
               << "checks run: " << report.checks_run << '\n'
               << "failures: " << report.failures.size() << '\n';
            for (const auto& f : report.failures) {
                os << "  " << f.check << " p=" << f.p << " q=" << f.q;
                if (f.q2) os << " q2=" << *f.q2;
                os << " expected=" << f.expected << " actual=" << f.actual << '\n';
            }
            os << "composite collisions (informational): " << report.collisions.size() << '\n';
            for (const auto& c : report.collisions) {
                os << "  p=" << c.p << ':';
                for (const auto& [a, b] : c.pairs) os << " (" << a << ',' << b << ')';
                os << '\n';
            }
            os << "elapsed: " << std::fixed << std::setprecision(1) << report.elapsed_ms << " ms\n"
               << (report.passed() ? "PASS" : "FAIL") << '\n';
            break;
        case OutputFormat::Csv:
            os << "check,p,q,q2,expected,actual\n";
            for (const auto& f : report.failures) {
                os << f.check << ',' << f.p << ',' << f.q << ',';
                if (f.q2) os << *f.q2;
                os << ',' << f.expected << ',' << f.actual << '\n';
            }
            break;
        case OutputFormat::Json: {
            ordered_json failures = ordered_json::array();
            for (const auto& f : report.failures) {
                failures.push_back({{"check", f.check},
                                    {"p", f.p},
                                    {"q", f.q},
                                    {"q2", f.q2 ? ordered_json(*f.q2) : ordered_json(nullptr)},
                                    {"expected", f.expected},
                                    {"actual", f.actual}});
            }
            ordered_json collisions = ordered_json::array();
            for (const auto& c : report.collisions) {
                ordered_json pairs = ordered_json::array();
                for (const auto& [a, b] : c.pairs) pairs.push_back({a, b});
                collisions.push_back({{"p", c.p}, {"pairs", std::move(pairs)}});
            }
            os << dump(ordered_json{{"max_p", max_p},
                                    {"checks_run", report.checks_run},
                                    {"passed", report.passed()},
                                    {"failures", std::move(failures)},
                                    {"collisions", std::move(collisions)},
                                    {"elapsed_ms", report.elapsed_ms}});
            break;
        }
    }
    return os.str();
}

std::string render_search(const std::vector<ExoticPair>& pairs, int64_t max_p, int summands,
                          OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Plain:
            for (const auto& pair : pairs) {
                os << pair.first << " ~h " << pair.second << " (not homeo)\n";
            }
            break;
        case OutputFormat::Csv:
            os << "first,second\n";
            for (const auto& pair : pairs) os << pair.first << ',' << pair.second << '\n';
            break;
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& pair : pairs) {
                arr.push_back(
                    {{"first", summands_json(pair.first)}, {"second", summands_json(pair.second)}});
            }
            os << dump(ordered_json{
                {"max_p", max_p}, {"summands", summands}, {"pairs", std::move(arr)}});
            break;
        }
    }
    return os.str();
}

std::string render_obstruction(const QuotientData& data, OutputFormat fmt) {
    const bool obstructed = universally_tight_obstructed(data);
    const int64_t modulus = data.pullback_class().modulus().value();
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Plain:
            os << (obstructed ? "obstructed" : "unobstructed") << " (mod " << modulus << ")\n";
            break;
        case OutputFormat::Csv:
            os << "group_order,h1_z2_trivial,pullback_class,modulus,obstructed\n"
               << data.group_order() << ',' << (data.h1_z2_trivial() ? "true" : "false") << ','
               << data.pullback_class().value() << ',' << modulus << ','
               << (obstructed ? "true" : "false") << '\n';
            break;
        case OutputFormat::Json:
            os << dump(ordered_json{{"group_order", data.group_order()},
                                    {"h1_z2_trivial", data.h1_z2_trivial()},
                                    {"pullback_class", data.pullback_class().value()},
                                    {"modulus", modulus},
                                    {"obstructed", obstructed}});
            break;
    }
    return os.str();
}

}  // namespace lensfr
