#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sqleq/errors.hpp"
#include "sqleq/value.hpp"

namespace sqleq {

struct ColumnDef {
    std::string name;  // stored case-folded
    Dtype dtype = Dtype::Integer;
    bool nullable = true;
};

struct ForeignKey {
    std::vector<std::string> columns;
    std::string target_table;
    std::vector<std::string> target_columns;  // empty means the target's primary key
};

struct TableDef {
    std::string name;
    std::vector<ColumnDef> columns;
    std::vector<std::string> primary_key;  // ordered subset of column names, possibly empty
    std::vector<ForeignKey> foreign_keys;

    const ColumnDef* find_column(const std::string& folded_name) const {
        for (const auto& c : columns)
            if (c.name == folded_name) return &c;
        return nullptr;
    }

    int column_index(const std::string& folded_name) const {
        for (size_t i = 0; i < columns.size(); ++i)
            if (columns[i].name == folded_name) return static_cast<int>(i);
        return -1;
    }

    bool in_primary_key(const std::string& folded_name) const {
        return std::find(primary_key.begin(), primary_key.end(), folded_name) !=
               primary_key.end();
    }
};

/// All identifiers are case-folded on construction; `check()` enforces the
/// structural invariants (unique names, resolvable keys).
class Schema {
public:
    const std::vector<TableDef>& tables() const { return tables_; }
    bool empty() const { return tables_.empty(); }

    const TableDef* find_table(const std::string& name) const {
        std::string folded = fold_case(name);
        for (const auto& t : tables_)
            if (t.name == folded) return &t;
        return nullptr;
    }

    void add_table(TableDef def) {
        if (find_table(def.name))
            throw SchemaError(SchemaErrorKind::DuplicateName,
                              "duplicate table name: " + def.name);
        tables_.push_back(std::move(def));
    }

    /// Validates name uniqueness, primary-key columns and foreign-key targets.
    void check() const {
        for (const auto& t : tables_) {
            for (size_t i = 0; i < t.columns.size(); ++i)
                for (size_t j = i + 1; j < t.columns.size(); ++j)
                    if (t.columns[i].name == t.columns[j].name)
                        throw SchemaError(SchemaErrorKind::DuplicateName,
                                          "duplicate column " + t.columns[i].name +
                                              " in table " + t.name);
            for (const auto& pk : t.primary_key)
                if (!t.find_column(pk))
                    throw SchemaError(SchemaErrorKind::BadPrimaryKey,
                                      "primary key column " + pk +
                                          " does not exist in table " + t.name);
            for (const auto& fk : t.foreign_keys) {
                for (const auto& c : fk.columns)
                    if (!t.find_column(c))
                        throw SchemaError(SchemaErrorKind::DanglingReference,
                                          "foreign key column " + c +
                                              " does not exist in table " + t.name);
                const TableDef* target = find_table(fk.target_table);
                if (!target)
                    throw SchemaError(SchemaErrorKind::DanglingReference,
                                      "foreign key in " + t.name +
                                          " references missing table " + fk.target_table);
                const auto& tcols =
                    fk.target_columns.empty() ? target->primary_key : fk.target_columns;
                if (tcols.size() != fk.columns.size())
                    throw SchemaError(SchemaErrorKind::DanglingReference,
                                      "foreign key in " + t.name + " has " +
                                          std::to_string(fk.columns.size()) +
                                          " columns but targets " +
                                          std::to_string(tcols.size()));
                for (const auto& c : tcols)
                    if (!target->find_column(c))
                        throw SchemaError(SchemaErrorKind::DanglingReference,
                                          "foreign key in " + t.name +
                                              " references missing column " +
                                              fk.target_table + "." + c);
            }
        }
    }

    /// Resolved target columns of a foreign key (defaults to the target PK).
    std::vector<std::string> fk_target_columns(const ForeignKey& fk) const {
        if (!fk.target_columns.empty()) return fk.target_columns;
        const TableDef* target = find_table(fk.target_table);
        return target ? target->primary_key : std::vector<std::string>{};
    }

    /// Is the column forced non-nullable, given the not-null-primary-key policy?
    bool column_effectively_nullable(const TableDef& t, const ColumnDef& c,
                                     bool allow_null_in_pk) const {
        if (!c.nullable) return false;
        if (!allow_null_in_pk && t.in_primary_key(c.name)) return false;
        return true;
    }

private:
    std::vector<TableDef> tables_;
};

using SchemaPtr = std::shared_ptr<const Schema>;

}  // namespace sqleq
