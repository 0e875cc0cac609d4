// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sk {

enum class Status { pass, fail, error, precondition_violated };

const char* to_string(Status status);

struct CheckItem {
    std::string name;
    Status status = Status::pass;
    std::optional<std::string> defect;
};

/// One mismatch between a published/expected value and the engine's value.
struct LedgerEntry {
    std::string quantity;
    std::string source;
    std::string expected;
    std::string computed;
    std::optional<std::string> note;
};

struct NamedValue {
    std::string name;
    std::string value;
};

enum class Overall { pass, fail, discrepancy, empty };

const char* to_string(Overall overall);

/// Structured result of a check or computation.
///
/// Overall is `fail` if any item is not `pass`; otherwise `pass` when the
/// ledger is empty or waived, else `discrepancy`. No items, values or ledger
/// entries at all is `empty`.
class CheckReport {
public:
    CheckReport() = default;
    explicit CheckReport(std::string subject) : subject(std::move(subject)) {}

    std::string subject;
    std::vector<CheckItem> items;
    std::vector<LedgerEntry> ledger;
    std::vector<NamedValue> values;
    bool ledger_waived = false;

    void check(std::string name, bool ok, std::optional<std::string> defect = std::nullopt);
    void add(CheckItem item) { items.push_back(std::move(item)); }
    void value(std::string name, std::string rendered) { values.push_back({std::move(name), std::move(rendered)}); }
    /// Appends the other report's items, values and ledger (subject kept).
    void merge(const CheckReport& other);

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] Overall overall() const;
    /// 0 pass/empty, 1 failures, 2 ledger discrepancies only.
    [[nodiscard]] int exit_code() const;
    [[nodiscard]] const CheckItem* find(std::string_view name) const;
};

enum class ReportFormat { text, json };

/// Deterministic serialization. JSON keys are sorted; rationals and
/// parameter expressions are rendered as strings.
std::string emit_report(const CheckReport& report, ReportFormat format);

}  // namespace sk
