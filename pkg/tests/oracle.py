"""Brute force reference implementations working on raw token lists.

They loop over ranks and terms with plain Python floats and share no code with
the package, so that randomized tests can compare the two.
"""
import math
from typing import Optional

Groups = dict[str, set[str]]
Target = dict[str, float]


def bias(rank: int, base: float) -> float:
    return math.log(base) / math.log(rank + 1)


def magnitudes(tokens: list[str], groups: Groups) -> dict[str, int]:
    return {g: sum(1 for t in tokens if t in terms) for g, terms in groups.items()}


def neutrality(tokens: list[str], groups: Groups, target: Target, tau: int) -> float:
    mags = magnitudes(tokens, groups)
    total = sum(mags.values())
    if total <= tau:
        return 1.0
    return 1.0 - sum(abs(mags[g] / total - target[g]) for g in groups)


def fairr(
    ranking: list[list[str]],
    groups: Groups,
    target: Target,
    k: int,
    tau: int,
    base: float,
) -> float:
    return sum(
        neutrality(doc, groups, target, tau) * bias(r, base)
        for r, doc in enumerate(ranking[:k], start=1)
    )


def ifairr(
    background: list[list[str]],
    groups: Groups,
    target: Target,
    k: int,
    tau: int,
    base: float,
) -> float:
    scores = sorted(
        (neutrality(doc, groups, target, tau) for doc in background), reverse=True
    )
    return sum(s * bias(r, base) for r, s in enumerate(scores[:k], start=1))


def nfairr(
    ranking: list[list[str]],
    background: list[list[str]],
    groups: Groups,
    target: Target,
    k: int,
    tau: int,
    base: float,
) -> Optional[float]:
    ideal = ifairr(background, groups, target, k, tau, base)
    if ideal <= 0:
        return None
    return fairr(ranking, groups, target, k, tau, base) / ideal


def exposures(
    ranking: list[list[str]], groups: Groups, k: int, base: float
) -> dict[str, float]:
    result = {g: 0.0 for g in groups}
    for r, doc in enumerate(ranking[:k], start=1):
        if not doc:
            continue
        for g, terms in groups.items():
            for term in terms:
                result[g] += bias(r, base) * doc.count(term) / len(doc)
    return result


def representation(
    ranking: list[list[str]], groups: Groups, k: int, base: float
) -> Optional[dict[str, float]]:
    exp = exposures(ranking, groups, k, base)
    total = sum(exp.values())
    if total == 0:
        return None
    return {g: exp[g] / total for g in groups}


def rbdf(ranking: list[list[str]], groups: Groups, k: int, base: float) -> float:
    all_terms = set().union(*groups.values())
    top = ranking[:k]
    num = sum(
        bias(r, base)
        for r, doc in enumerate(top, start=1)
        if any(t in all_terms for t in doc)
    )
    return num / sum(bias(r, base) for r in range(1, len(top) + 1))


def ted(
    ranking: list[list[str]],
    groups: Groups,
    target: Target,
    k: int,
    base: float,
    apply_rbdf: bool,
) -> float:
    exp = exposures(ranking, groups, k, base)
    total = sum(exp.values())
    if total == 0:
        return 0.0
    value = sum(abs(exp[g] / total - target[g]) for g in groups)
    return value * rbdf(ranking, groups, k, base) if apply_rbdf else value


def texfair(
    ranking: list[list[str]],
    groups: Groups,
    target: Target,
    k: int,
    base: float,
    apply_rbdf: bool = True,
) -> float:
    top = 2 * (1 - min(target.values()))
    return top - ted(ranking, groups, target, k, base, apply_rbdf)


def awrf_doc(
    ranking: list[list[str]], groups: Groups, target: Target, k: int, base: float
) -> Optional[float]:
    acc = {g: 0.0 for g in groups}
    for r, doc in enumerate(ranking[:k], start=1):
        mags = magnitudes(doc, groups)
        total = sum(mags.values())
        for g in groups:
            share = mags[g] / total if total else 1 / len(groups)
            acc[g] += bias(r, base) * share
    norm = sum(acc.values())
    if norm == 0:
        return None
    return 0.5 * sum(abs(acc[g] / norm - target[g]) for g in groups)


def rbo(a: list[str], b: list[str], p: float, depth: int, extrapolated: bool) -> float:
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    d_max = min(depth, len(a), len(b))
    total = 0.0
    for d in range(1, d_max + 1):
        total += p ** (d - 1) * len(set(a[:d]) & set(b[:d])) / d
    score = (1 - p) * total
    if extrapolated:
        score += len(set(a[:d_max]) & set(b[:d_max])) / d_max * p**d_max
    return score
