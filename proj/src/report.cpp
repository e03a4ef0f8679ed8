#include "dca/report.hpp"

#include <cstdint>
#include <sstream>

namespace dca {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

void finalize_status(RunReport& r) {
    if (r.status != 0) return;
    for (const std::string& line : r.verifications) {
        if (line.size() < 4 || line.compare(line.size() - 4, 4, ": ok") != 0) {
            r.status = 2;
            if (r.message.empty()) r.message = "verification failed";
        }
    }
}

Json report_to_json(const RunReport& r) {
    Json j;
    j["command"] = r.command;
    j["instance"] = r.instance_digest;
    j["status"] = r.status;
    if (!r.message.empty()) j["message"] = r.message;
    j["result"] = r.payload;
    j["verifications"] = r.verifications;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    out << "instance: " << r.instance_digest << "\n";
    out << "status: " << r.status << "\n";
    if (!r.message.empty()) out << "message: " << r.message << "\n";
    for (auto it = r.payload.begin(); it != r.payload.end(); ++it) {
        out << it.key() << ": ";
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
        out << "\n";
    }
    for (const std::string& line : r.verifications) out << "verified " << line << "\n";
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(3);
    ms << r.elapsed_ms;
    out << "elapsed_ms: " << ms.str() << "\n";
    return out.str();
}

}  // namespace dca
