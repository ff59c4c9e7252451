#pragma once

#include <vector>

#include "mop/cert.hpp"

namespace mop {

// Certificate-and-values document emitted by every pipeline. Serialization
// is deterministic: identical inputs give byte-identical output.
class Report {
public:
    explicit Report(std::string task) : task_(std::move(task)) {}

    void add_input(const std::string& key, const std::string& canonical_text);
    void add_value(const std::string& key, const std::string& canonical_text);
    void add(Certificate c);
    void add_all(const std::vector<Certificate>& cs);

    const std::string& task() const { return task_; }
    const std::vector<Certificate>& certificates() const { return certs_; }
    const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }
    const std::vector<std::pair<std::string, std::string>>& inputs() const { return inputs_; }
    const Certificate* find(const std::string& name) const;
    const std::string* value(const std::string& key) const;

    bool all_passed() const;
    bool any_failed() const;
    bool any_inconclusive() const;

    std::string to_json() const;
    std::string to_text() const;
    // 0 = all pass, 1 = some certificate failed, 3 = inconclusive only
    int exit_code() const;

private:
    std::string task_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<std::pair<std::string, std::string>> values_;
    std::vector<Certificate> certs_;
};

// writes atomically (temp file + rename)
void write_file(const std::string& path, const std::string& contents);

}  // namespace mop
