// Rendering of constraint indices as feature triples.
//
// A constraint index encodes three feature-value slots base 8; each slot
// code packs a feature (code >> 1) and a polarity (code & 1, 0 for +).

const FEATURE_NAMES = ["high", "low", "ATR", "wb"] as const;
const MINUS = "−";

export interface FeatureSpec {
    feature: (typeof FEATURE_NAMES)[number];
    positive: boolean;
}

export function decodeConstraint(index: number): [FeatureSpec, FeatureSpec, FeatureSpec] {
    if (!Number.isInteger(index) || index < 0 || index >= 512) {
        throw new RangeError(`constraint index out of range: ${index}`);
    }
    const codes = [Math.floor(index / 64) % 8, Math.floor(index / 8) % 8, index % 8];
    const specs = codes.map((code) => ({
        feature: FEATURE_NAMES[code >> 1],
        positive: (code & 1) === 0,
    }));
    return specs as [FeatureSpec, FeatureSpec, FeatureSpec];
}

/** Human-readable triple, e.g. "[+ATR][−ATR][+wb]". */
export function renderConstraint(index: number): string {
    return decodeConstraint(index)
        .map((spec) => `[${spec.positive ? "+" : MINUS}${spec.feature}]`)
        .join("");
}
