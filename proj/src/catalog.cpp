#include "tptri/catalog.hpp"

#include "tptri/rational.hpp"

namespace tptri {

namespace {

CoefficientSpec make_spec(const char* name, const char* r, const char* s, const char* t) {
    return CoefficientSpec(SeqGen::from_text(r, 1), SeqGen::from_text(s, 0),
                           SeqGen::from_text(t, 1), name);
}

GeneralSpec make_eulerian() {
    GeneralSpec g;
    g.name = "eulerian";
    g.index_origin = 1;
    g.base = 1;
    // A(n+1, k) = (n - k + 2) A(n, k-1) + k A(n, k)
    g.u = [](long n, long k) { return Rational(n - k + 2); };
    g.v = [](long, long k) { return Rational(k); };
    return g;
}

GeneralSpec make_narayana() {
    GeneralSpec g;
    g.name = "narayana";
    g.index_origin = 1;
    g.base = 1;
    // N(n, k) = C(n-1, k-1) C(n, k-1) / k is the defining formula; the
    // rational-coefficient recurrence below only makes sense for k >= 2
    // (and needs k <= n-1 so no out-of-triangle entries appear), so the
    // cross-check is registered exactly there.
    g.closed_form = [](long n, long k) {
        Integer prod = binomial(static_cast<unsigned long>(n - 1),
                                static_cast<unsigned long>(k - 1));
        prod *= binomial(static_cast<unsigned long>(n),
                         static_cast<unsigned long>(k - 1));
        Rational value(prod);
        value /= k;
        return value;
    };
    g.closed_form_primary = true;
    g.u = [](long n, long k) {
        Rational value(n * (n + 1), 2 * k * (k - 1));
        value.canonicalize();
        return value;
    };
    g.v = [](long n, long k) {
        Rational value(n * (n + 1), 2 * (n - k + 1) * (n - k + 2));
        value.canonicalize();
        return value;
    };
    g.cross_check_at = [](long n, long k) { return k >= 2 && k <= n - 1; };
    return g;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back({"pascal", "binomial coefficients C(n, k)",
                       make_spec("pascal", "1", "1", "0")});
    entries.push_back({"stirling2", "set partition counts S(n+1, k+1)",
                       make_spec("stirling2", "1", "k + 1", "0")});
    entries.push_back({"aigner-catalan", "ballot-type triangle with Catalan first column",
                       make_spec("aigner-catalan", "1", "[1] ++ 2", "1")});
    entries.push_back({"shapiro-catalan", "Shapiro's Catalan triangle",
                       make_spec("shapiro-catalan", "1", "2", "1")});
    entries.push_back({"bell", "triangle with the Bell numbers as first column",
                       make_spec("bell", "1", "k + 1", "k")});
    entries.push_back({"eulerian", "descent counts over permutations",
                       make_eulerian()});
    entries.push_back({"narayana", "Narayana numbers C(n-1,k-1) C(n,k-1) / k",
                       make_narayana()});
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* catalog_find(std::string_view name) {
    for (const CatalogEntry& entry : catalog()) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

}  // namespace tptri
