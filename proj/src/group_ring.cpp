#include "kazhdan/group_ring.hpp"

#include <unordered_set>

namespace kazhdan {

LaplacianBundle laplacian(const GroupBackend& backend, const std::vector<GroupElementId>& generators)
{
    if (generators.empty()) {
        throw InputError("generating set is empty");
    }
    std::unordered_set<GroupElementId, GroupElementIdHash> members(generators.begin(),
                                                                   generators.end());
    for (const auto& s : generators) {
        if (!members.count(backend.invert(s))) {
            throw InputError("generating set is not closed under inverse at " + backend.format(s));
        }
    }
    LaplacianBundle bundle;
    bundle.generators = generators;
    bundle.size = generators.size();
    bundle.delta.add_term(backend.identity(), Rational(static_cast<long>(generators.size())));
    for (const auto& s : generators) {
        bundle.delta.add_term(s, Rational(-1));
    }
    return bundle;
}

LaplacianBundle laplacian(const GroupBackend& backend)
{
    std::vector<GroupElementId> gens;
    for (std::size_t a = 0; a < backend.generators().size(); ++a) {
        gens.push_back(backend.generator(static_cast<Letter>(a)));
    }
    return laplacian(backend, gens);
}

}  // namespace kazhdan
