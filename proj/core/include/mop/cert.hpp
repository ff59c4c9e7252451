#pragma once

#include <string>

namespace mop {

enum class CertStatus { Pass, Fail, Inconclusive };

struct Certificate {
    std::string name;
    CertStatus status = CertStatus::Fail;
    std::string detail;

    bool passed() const { return status == CertStatus::Pass; }
};

inline const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Pass: return "pass";
        case CertStatus::Fail: return "fail";
        case CertStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace mop
