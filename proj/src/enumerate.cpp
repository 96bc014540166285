#include "estarlab/enumerate.hpp"

#include "estarlab/errors.hpp"

namespace estarlab {

std::vector<std::string> generic_points(int n) {
    std::vector<std::string> pts;
    pts.reserve(n);
    for (int i = 1; i <= n; ++i) pts.push_back("p" + std::to_string(i));
    return pts;
}

std::vector<SpacePtr> enumerate_topologies(int n) {
    if (n < 1 || n > 4) fail(Errc::precondition_violated, "enumeration supports 1..4 points");
    const Mask full = full_mask(n);
    const int middle = static_cast<int>(full) - 1;  // proper nonempty subsets 1..full-1

    std::vector<SpacePtr> out;
    const auto points = generic_points(n);
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << middle); ++code) {
        std::vector<Mask> fam;
        fam.push_back(0);
        for (int i = 0; i < middle; ++i)
            if ((code >> i) & 1u) fam.push_back(static_cast<Mask>(i + 1));
        fam.push_back(full);

        bool closed = true;
        for (std::size_t i = 0; i < fam.size() && closed; ++i) {
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                const Mask u = fam[i] | fam[j];
                const Mask w = fam[i] & fam[j];
                bool has_u = false, has_w = false;
                for (Mask m : fam) {
                    has_u |= (m == u);
                    has_w |= (m == w);
                }
                if (!has_u || !has_w) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) out.push_back(make_space(points, fam));
    }
    return out;
}

}  // namespace estarlab
