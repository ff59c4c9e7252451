#include "mop/report.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "mop/rational.hpp"

namespace mop {

void Report::add_input(const std::string& key, const std::string& canonical_text) {
    inputs_.emplace_back(key, canonical_text);
}

void Report::add_value(const std::string& key, const std::string& canonical_text) {
    values_.emplace_back(key, canonical_text);
}

void Report::add(Certificate c) { certs_.push_back(std::move(c)); }

void Report::add_all(const std::vector<Certificate>& cs) {
    certs_.insert(certs_.end(), cs.begin(), cs.end());
}

const Certificate* Report::find(const std::string& name) const {
    for (const auto& c : certs_)
        if (c.name == name) return &c;
    return nullptr;
}

const std::string* Report::value(const std::string& key) const {
    for (const auto& [k, v] : values_)
        if (k == key) return &v;
    return nullptr;
}

bool Report::all_passed() const {
    for (const auto& c : certs_)
        if (c.status != CertStatus::Pass) return false;
    return true;
}

bool Report::any_failed() const {
    for (const auto& c : certs_)
        if (c.status == CertStatus::Fail) return true;
    return false;
}

bool Report::any_inconclusive() const {
    for (const auto& c : certs_)
        if (c.status == CertStatus::Inconclusive) return true;
    return false;
}

int Report::exit_code() const {
    if (any_failed()) return 1;
    if (any_inconclusive()) return 3;
    return 0;
}

std::string Report::to_json() const {
    // nlohmann's default object keeps keys sorted, which pins the byte layout
    nlohmann::json doc;
    doc["task"] = task_;
    doc["inputs"] = nlohmann::json::object();
    for (const auto& [k, v] : inputs_) doc["inputs"][k] = v;
    doc["values"] = nlohmann::json::object();
    for (const auto& [k, v] : values_) doc["values"][k] = v;
    doc["certificates"] = nlohmann::json::array();
    for (const auto& c : certs_) {
        nlohmann::json item;
        item["name"] = c.name;
        item["status"] = cert_status_name(c.status);
        item["detail"] = c.detail;
        doc["certificates"].push_back(item);
    }
    return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::string out = "task: " + task_ + "\n";
    if (!inputs_.empty()) {
        out += "inputs:\n";
        for (const auto& [k, v] : inputs_) out += "  " + k + " = " + v + "\n";
    }
    out += "certificates:\n";
    for (const auto& c : certs_) {
        out += "  [" + std::string(cert_status_name(c.status)) + "] " + c.name;
        if (!c.detail.empty()) out += " -- " + c.detail;
        out += "\n";
    }
    if (!values_.empty()) {
        out += "values:\n";
        for (const auto& [k, v] : values_) out += "  " + k + " = " + v + "\n";
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw arith_error("cannot open output file: " + tmp);
        f << contents;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw arith_error("cannot write output file: " + path);
}

}  // namespace mop
