#pragma once

// JSON and CSV forms of reports and campaigns. JSON numbers are written in
// the shortest form that parses back to the same double, so reports
// round-trip exactly.

#include <sgspec/sym_matrix.hpp>
#include <sgspec/verify/campaign.hpp>
#include <sgspec/verify/report.hpp>

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace sgspec::verify {

using Json = nlohmann::ordered_json;

inline Json to_json(const InterlacingReport& r) {
    Json j;
    j["theorem"] = std::string(to_string(r.theorem));
    j["graph"] = r.graph;
    j["derived_graph"] = r.derived_graph;
    j["surgery"] = r.surgery;
    j["hypothesis_met"] = r.hypothesis_met;
    j["holds"] = r.holds;
    j["worst_slack"] = r.worst_slack;
    j["witness_position"] = r.witness_position;
    j["witness_relation"] = r.witness_relation;
    j["tol"] = r.tol;
    Json spectra = Json::object();
    for (const auto& s : r.spectra) spectra[s.name] = s.values;
    j["spectra"] = std::move(spectra);
    Json skipped = Json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"relation", s.relation}, {"position", s.position}});
    j["skipped_links"] = std::move(skipped);
    j["flags"] = r.flags;
    j["note"] = r.note;
    return j;
}

inline InterlacingReport report_from_json(const Json& j) {
    try {
        InterlacingReport r;
        r.theorem = theorem_from_string(j.at("theorem").get<std::string>());
        r.graph = j.at("graph").get<std::string>();
        r.derived_graph = j.at("derived_graph").get<std::string>();
        r.surgery = j.at("surgery").get<std::string>();
        r.hypothesis_met = j.at("hypothesis_met").get<bool>();
        r.holds = j.at("holds").get<bool>();
        r.worst_slack = j.at("worst_slack").get<double>();
        r.witness_position = j.at("witness_position").get<int>();
        r.witness_relation = j.at("witness_relation").get<std::string>();
        r.tol = j.at("tol").get<double>();
        for (const auto& [name, values] : j.at("spectra").items())
            r.spectra.push_back({name, values.get<std::vector<double>>()});
        for (const auto& s : j.at("skipped_links"))
            r.skipped.push_back({s.at("relation").get<std::string>(), s.at("position").get<int>()});
        r.flags = j.at("flags").get<std::vector<std::string>>();
        r.note = j.at("note").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
    }
}

inline Json to_json(const CampaignConfig& c) {
    Json theorems = Json::array();
    for (auto id : c.theorems) theorems.push_back(std::string(to_string(id)));
    return {{"theorems", theorems}, {"n_min", c.n_min}, {"n_max", c.n_max}, {"p", c.p},
            {"q", c.q},             {"samples", c.samples}, {"seed", c.seed}, {"tol", c.tol}};
}

inline Json summary_json(const CampaignResult& res) {
    Json rows = Json::array();
    for (const auto& s : res.summary) {
        Json row{{"theorem", std::string(to_string(s.theorem))},
                 {"checks", s.checks},
                 {"holds", s.holds},
                 {"fails", s.fails},
                 {"skipped", s.skipped}};
        if (s.worst_index >= 0) {
            const auto& w = res.reports[static_cast<std::size_t>(s.worst_index)];
            row["worst_slack"] = s.worst_slack;
            row["witness_graph"] = w.graph;
            row["witness_surgery"] = w.surgery;
            row["witness_position"] = w.witness_position;
            row["witness_relation"] = w.witness_relation;
        } else {
            row["worst_slack"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    return {{"theorems", rows}, {"total_fails", res.total_fails()}};
}

inline Json to_json(const CampaignResult& res) {
    Json reports = Json::array();
    for (const auto& r : res.reports) reports.push_back(to_json(r));
    return {{"config", to_json(res.config)}, {"summary", summary_json(res)}, {"reports", std::move(reports)}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <class Seq>
std::string joined(const Seq& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ' ';
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) out += format_g17(v);
        else out += v;
    }
    return out;
}

} // namespace detail

inline constexpr const char* kCsvHeader =
    "theorem,hypothesis_met,holds,worst_slack,witness_position,witness_relation,tol,surgery,graph,"
    "derived_graph,alpha,beta,mu,skipped_links,flags,note";

/// One row per report; spectra are space-separated with 17 significant digits.
inline void write_csv(std::ostream& out, const std::vector<InterlacingReport>& reports) {
    out << kCsvHeader << '\n';
    for (const auto& r : reports) {
        auto spec = [&](const char* name) {
            const auto* s = r.spectrum(name);
            return s ? detail::joined(s->values) : std::string();
        };
        std::vector<std::string> skipped;
        for (const auto& s : r.skipped) skipped.push_back(std::to_string(s.position) + ":" + s.relation);
        std::string skipped_text;
        for (const auto& s : skipped) skipped_text += (skipped_text.empty() ? "" : ";") + s;
        out << to_string(r.theorem) << ',' << (r.hypothesis_met ? "true" : "false") << ','
            << (r.holds ? "true" : "false") << ',' << format_g17(r.worst_slack) << ',' << r.witness_position
            << ',' << detail::csv_field(r.witness_relation) << ',' << format_g17(r.tol) << ','
            << detail::csv_field(r.surgery) << ',' << detail::csv_field(r.graph) << ','
            << detail::csv_field(r.derived_graph) << ',' << spec("alpha") << ',' << spec("beta") << ','
            << spec("mu") << ',' << detail::csv_field(skipped_text) << ','
            << detail::csv_field(detail::joined(r.flags)) << ',' << detail::csv_field(r.note) << '\n';
    }
}

inline std::string to_csv(const std::vector<InterlacingReport>& reports) {
    std::ostringstream os;
    write_csv(os, reports);
    return os.str();
}

} // namespace sgspec::verify
