// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace sk {

const char* to_string(Status status)
{
    switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    case Status::precondition_violated: return "precondition_violated";
    }
    return "error";
}

const char* to_string(Overall overall)
{
    switch (overall) {
    case Overall::pass: return "pass";
    case Overall::fail: return "fail";
    case Overall::discrepancy: return "discrepancy";
    case Overall::empty: return "no checks run";
    }
    return "fail";
}

void CheckReport::check(std::string name, bool ok, std::optional<std::string> defect)
{
    items.push_back({std::move(name), ok ? Status::pass : Status::fail, ok ? std::nullopt : std::move(defect)});
}

void CheckReport::merge(const CheckReport& other)
{
    items.insert(items.end(), other.items.begin(), other.items.end());
    values.insert(values.end(), other.values.begin(), other.values.end());
    ledger.insert(ledger.end(), other.ledger.begin(), other.ledger.end());
}

bool CheckReport::all_pass() const
{
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.status == Status::pass; });
}

Overall CheckReport::overall() const
{
    if (items.empty() && values.empty() && ledger.empty())
        return Overall::empty;
    if (!all_pass())
        return Overall::fail;
    if (ledger.empty() || ledger_waived)
        return Overall::pass;
    return Overall::discrepancy;
}

int CheckReport::exit_code() const
{
    switch (overall()) {
    case Overall::fail: return 1;
    case Overall::discrepancy: return 2;
    default: return 0;
    }
}

const CheckItem* CheckReport::find(std::string_view name) const
{
    auto it = std::find_if(items.begin(), items.end(), [&](const CheckItem& i) { return i.name == name; });
    return it == items.end() ? nullptr : &*it;
}

namespace {

std::string emit_json(const CheckReport& r)
{
    nlohmann::json doc;
    doc["subject"] = r.subject;
    doc["overall"] = to_string(r.overall());
    doc["items"] = nlohmann::json::array();
    for (const auto& item : r.items) {
        nlohmann::json j{{"name", item.name}, {"status", to_string(item.status)}};
        if (item.defect)
            j["defect"] = *item.defect;
        doc["items"].push_back(std::move(j));
    }
    doc["ledger"] = nlohmann::json::array();
    for (const auto& e : r.ledger) {
        nlohmann::json j{{"quantity", e.quantity}, {"source", e.source}, {"expected", e.expected}, {"computed", e.computed}};
        if (e.note)
            j["note"] = *e.note;
        doc["ledger"].push_back(std::move(j));
    }
    if (!r.values.empty()) {
        doc["values"] = nlohmann::json::array();
        for (const auto& v : r.values)
            doc["values"].push_back({{"name", v.name}, {"value", v.value}});
    }
    if (r.ledger_waived)
        doc["ledger_waived"] = true;
    return doc.dump(2) + "\n";
}

void emit_rows(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line = "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << '\n';
    }
}

std::string emit_text(const CheckReport& r)
{
    std::ostringstream os;
    os << "subject: " << r.subject << '\n';
    if (r.overall() == Overall::empty) {
        os << "no checks run\n";
        return os.str();
    }
    if (!r.values.empty()) {
        os << "values:\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& v : r.values)
            rows.push_back({v.name, "=", v.value});
        emit_rows(os, rows);
    }
    if (!r.items.empty()) {
        os << "checks:\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& i : r.items)
            rows.push_back({to_string(i.status), i.name, i.defect ? "defect: " + *i.defect : ""});
        emit_rows(os, rows);
    }
    if (!r.ledger.empty()) {
        os << (r.ledger_waived ? "ledger (waived):\n" : "ledger:\n");
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"quantity", "source", "expected", "computed"});
        for (const auto& e : r.ledger)
            rows.push_back({e.quantity, e.source, e.expected, e.computed});
        emit_rows(os, rows);
        for (const auto& e : r.ledger)
            if (e.note)
                os << "  note (" << e.quantity << "): " << *e.note << '\n';
    }
    os << "overall: " << to_string(r.overall()) << '\n';
    return os.str();
}

}  // namespace

std::string emit_report(const CheckReport& report, ReportFormat format)
{
    if (format == ReportFormat::json)
        return emit_json(report);
    return emit_text(report);
}

}  // namespace sk
