#pragma once

// Default HTTP transport on top of cpp-httplib. Kept out of oeis.hpp so test
// binaries that inject fake transports never pull in the TLS stack.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <chrono>
#include <optional>
#include <string>

#include "oeis.hpp"

namespace pathweight::oeis {

class HttplibTransport : public HttpTransport {
public:
    std::optional<HttpResponse> get(const std::string& url,
                                    std::chrono::milliseconds timeout) override {
        auto scheme_end = url.find("://");
        if (scheme_end == std::string::npos) return std::nullopt;
        auto path_start = url.find('/', scheme_end + 3);
        std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
        std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
        httplib::Client client(origin);
        client.set_follow_location(true);
        client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
        client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
        auto res = client.Get(path);
        if (!res) return std::nullopt;
        return HttpResponse{res->status, res->body};
    }
};

}  // namespace pathweight::oeis
