#include <openssl/evp.h>

#include <cstdarg>
#include <cstdio>
#include <stdexcept>

#include "cli.hpp"

namespace degcenter::cli {

std::string format(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list copy;
    va_copy(copy, args);
    const int n = std::vsnprintf(nullptr, 0, fmt, copy);
    va_end(copy);
    std::string out(static_cast<std::size_t>(n), '\0');
    std::vsnprintf(out.data(), out.size() + 1, fmt, args);
    va_end(args);
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::string hex;
    for (unsigned int k = 0; k < len; ++k) hex += format("%02x", digest[k]);
    return hex;
}

std::string tool_version() { return DEGCENTER_VERSION; }

void RunManifest::write(std::ostream& out) const {
    out << "# manifest\n";
    out << "command: " << command << '\n';
    out << "input-sha256: " << input_digest << '\n';
    out << format("tolerances: quadrature=%.3g ode=%.3g root=%.3g\n", tolerances.quadrature, tolerances.ode,
                  tolerances.root);
    out << "version: " << version << '\n';
    out << "duration: reported on stderr\n\n";
}

double RunManifest::elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
}

}  // namespace degcenter::cli
