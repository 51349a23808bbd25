#include "pretop/maps.hpp"

#include <sstream>

namespace pretop {

FiniteMap::FiniteMap(Pretopology dom, Pretopology cod, std::vector<int> im)
    : domain(std::move(dom)), codomain(std::move(cod)), images(std::move(im)) {
    if (static_cast<int>(images.size()) != domain.size())
        fail(Errc::size_mismatch, "image tuple must cover the domain");
    for (int y : images)
        if (y < 0 || y >= codomain.size())
            fail(Errc::point_out_of_range, "image point " + std::to_string(y), y);
}

Mask FiniteMap::image_of(Mask a) const {
    domain.check_subset(a);
    Mask out = 0;
    for_each_point(a, [&](int x) { out |= bit(images[static_cast<size_t>(x)]); });
    return out;
}

Mask FiniteMap::preimage_of(Mask b) const {
    codomain.check_subset(b);
    Mask out = 0;
    for (int x = 0; x < domain.size(); ++x)
        if (has(b, images[static_cast<size_t>(x)])) out |= bit(x);
    return out;
}

FiniteMap identity_map(const Pretopology& space) {
    std::vector<int> im(static_cast<size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) im[static_cast<size_t>(x)] = x;
    return FiniteMap(space, space, std::move(im));
}

FiniteMap constant_map(const Pretopology& domain, const Pretopology& codomain, int value) {
    codomain.check_point(value);
    return FiniteMap(domain, codomain, std::vector<int>(static_cast<size_t>(domain.size()), value));
}

bool continuous_at(const Pretopology& x_space, const Pretopology& y_space,
                   std::span<const int> images, int x) {
    x_space.check_point(x);
    Mask target = y_space.minimal_neighborhood(images[static_cast<size_t>(x)]);
    bool ok = true;
    for_each_point(x_space.minimal_neighborhood(x), [&](int z) {
        if (!has(target, images[static_cast<size_t>(z)])) ok = false;
    });
    return ok;
}

bool continuous(const Pretopology& x_space, const Pretopology& y_space,
                std::span<const int> images) {
    for (int x = 0; x < x_space.size(); ++x)
        if (!continuous_at(x_space, y_space, images, x)) return false;
    return true;
}

bool continuous_at(const FiniteMap& f, int x) {
    return continuous_at(f.domain, f.codomain, f.images, x);
}

bool continuous(const FiniteMap& f) {
    return continuous(f.domain, f.codomain, f.images);
}

FiniteMap compose(const FiniteMap& f, const FiniteMap& g) {
    if (!(f.codomain == g.domain))
        fail(Errc::space_mismatch, "codomain of the first map must be the domain of the second");
    std::vector<int> im(f.images.size());
    for (size_t x = 0; x < f.images.size(); ++x)
        im[x] = g.images[static_cast<size_t>(f.images[x])];
    return FiniteMap(f.domain, g.codomain, std::move(im));
}

FiniteMap projection(const Pretopology& a, const Pretopology& b, int which, int bound) {
    Pretopology prod = product(a, b, bound);
    std::vector<int> im(static_cast<size_t>(prod.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            im[static_cast<size_t>(pair_index(i, j, b.size()))] = (which == 0) ? i : j;
    return FiniteMap(prod, which == 0 ? a : b, std::move(im));
}

FiniteMap product_map(const FiniteMap& f1, const FiniteMap& f2, int bound) {
    Pretopology dom = product(f1.domain, f2.domain, bound);
    Pretopology cod = product(f1.codomain, f2.codomain, bound);
    std::vector<int> im(static_cast<size_t>(dom.size()));
    for (int i = 0; i < f1.domain.size(); ++i)
        for (int j = 0; j < f2.domain.size(); ++j)
            im[static_cast<size_t>(pair_index(i, j, f2.domain.size()))] =
                pair_index(f1(i), f2(j), f2.codomain.size());
    return FiniteMap(std::move(dom), std::move(cod), std::move(im));
}

FiniteMap restrict_map(const FiniteMap& f, Mask a) {
    Pretopology sub = subspace(f.domain, a);
    std::vector<int> im;
    for_each_point(a, [&](int x) { im.push_back(f(x)); });
    return FiniteMap(std::move(sub), f.codomain, std::move(im));
}

bool theta_continuous(const Topology& x_top, const Topology& y_top, std::span<const int> images) {
    return continuous(theta_structure(x_top), theta_structure(y_top), images);
}

bool ContinuityProfile::implications_hold() const {
    if (continuous && !theta_continuous) return false;
    if (strongly_theta_continuous && !(continuous && theta_continuous)) return false;
    if (super_continuous && !continuous) return false;
    if (continuous && !weakly_continuous) return false;
    if (theta_continuous && !weakly_theta_continuous) return false;
    return true;
}

std::string ContinuityProfile::to_string() const {
    std::ostringstream os;
    os << "continuous=" << continuous
       << " theta=" << theta_continuous
       << " strongly-theta=" << strongly_theta_continuous
       << " weakly=" << weakly_continuous
       << " weakly-theta=" << weakly_theta_continuous
       << " super=" << super_continuous;
    return os.str();
}

ContinuityProfile classify(const Topology& x_top, const Topology& y_top, std::span<const int> images) {
    Pretopology theta_x = theta_structure(x_top);
    Pretopology theta_y = theta_structure(y_top);
    Pretopology semireg_x = semi_regularization(x_top).base();
    ContinuityProfile p;
    p.continuous = continuous(x_top.base(), y_top.base(), images);
    p.theta_continuous = continuous(theta_x, theta_y, images);
    p.strongly_theta_continuous = continuous(theta_x, y_top.base(), images);
    p.super_continuous = continuous(semireg_x, y_top.base(), images);
    p.weakly_continuous = continuous(x_top.base(), theta_y, images);
    p.weakly_theta_continuous = continuous(semireg_x, theta_y, images);
    return p;
}

std::string describe_images(std::span<const int> images) {
    std::string out = "[";
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images[i]);
    }
    out += ']';
    return out;
}

} // namespace pretop
