#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "latrect/oeis.hpp"

namespace latrect::oeis {

namespace {

class HttpsTransport final : public Transport {
public:
    std::string get(const std::string &url) override {
        constexpr std::string_view scheme = "https://";
        if (url.rfind(scheme, 0) != 0)
            throw FetchError("only https URLs are supported: " + url);
        const auto slash = url.find('/', scheme.size());
        const std::string host = url.substr(scheme.size(), slash - scheme.size());
        const std::string path = slash == std::string::npos ? "/" : url.substr(slash);

        httplib::SSLClient client(host);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        auto res = client.Get(path);
        if (!res)
            throw FetchError("GET " + url + " failed: " + httplib::to_string(res.error()));
        if (res->status != 200)
            throw FetchError("GET " + url + " returned HTTP " + std::to_string(res->status));
        return res->body;
    }
};

}  // namespace

std::unique_ptr<Transport> make_https_transport() { return std::make_unique<HttpsTransport>(); }

}  // namespace latrect::oeis
