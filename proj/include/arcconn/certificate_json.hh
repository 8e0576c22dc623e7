/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_CERTIFICATE_JSON_HH
#define ARCCONN_GUARD_ARCCONN_CERTIFICATE_JSON_HH 1

#include <arcconn/digraph.hh>
#include <arcconn/digraph_io.hh>
#include <arcconn/sssc.hh>

#include <optional>
#include <string>

namespace arcconn
{
    /**
     * A certificate family together with the host it was built in. On disk:
     *
     *     {"n": order, "s": x, "t": y, "members": [[[u,v], ...], ...],
     *      "arcs": [[u,v], ...], "factors": [n, m]}
     *
     * "arcs" and "factors" are optional when reading; without "arcs" the
     * host must be supplied separately.
     */
    struct CertificateBundle
    {
        int order;
        CertificateFamily family;
        std::optional<Digraph> host;
        std::optional<ProductShape> factors;
    };

    auto certificate_to_json(const CertificateBundle & bundle) -> std::string;

    /// Throws ParseError on malformed JSON or schema violations.
    auto certificate_from_json(const std::string & text) -> CertificateBundle;

    auto read_certificate_file(const std::string & filename) -> CertificateBundle;

    /// {"n": order, "arcs": [[u,v], ...]} plus "factors": [n, m] for a product.
    auto digraph_to_json(const Digraph & d, std::optional<ProductShape> factors = std::nullopt) -> std::string;

    auto digraph_from_json(const std::string & text) -> TextDigraph;
}

#endif
