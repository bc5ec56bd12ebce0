// Feedback composer: builds exactly the strings the service grammar accepts.
// Dropdown-driven so a human cannot leave the grammar; the only free text is
// a single novel colour word, validated before it reaches the wire.
// Words that would collide with the grammar's own tokens.
const RESERVED = new Set(["yes", "no", "and", "things", "do", "it", "when", "you", "see"]);
export function validColourWord(word) {
    return /^[a-z]+$/.test(word) && !RESERVED.has(word);
}
function checkAdverbs(adverbs, vocab) {
    if (adverbs.length === 0) {
        throw new Error("pick at least one adverb");
    }
    const dims = adverbs.map((a) => {
        const dim = vocab.adverbs[a];
        if (dim === undefined) {
            throw new Error(`unknown adverb: ${a}`);
        }
        return dim;
    });
    if (new Set(dims).size !== dims.length) {
        throw new Error("adverbs must lie on distinct dimensions");
    }
}
/** Render a composer state to the exact utterance string. */
export function composeFeedback(state, vocab) {
    if (state.kind === "yes") {
        return "yes";
    }
    checkAdverbs(state.adverbs, vocab);
    const adverbPhrase = state.adverbs.join(" and ");
    if (state.kind === "partial") {
        return `no, do it ${adverbPhrase}`;
    }
    if (state.colour === null && state.shape === null) {
        throw new Error("a full correction needs a colour or a shape");
    }
    if (state.colour !== null && !validColourWord(state.colour)) {
        throw new Error(`not a usable colour word: ${state.colour}`);
    }
    if (state.shape !== null && !vocab.shapes.includes(state.shape)) {
        throw new Error(`unknown shape: ${state.shape}`);
    }
    let noun;
    if (state.colour !== null && state.shape !== null) {
        noun = `${state.colour} ${state.shape}s`;
    }
    else if (state.colour !== null) {
        noun = `${state.colour} things`;
    }
    else {
        noun = `${state.shape}s`;
    }
    return `no, when you see ${noun} do it ${adverbPhrase}`;
}
function adverbCombos(vocab) {
    const names = Object.keys(vocab.adverbs).sort();
    const combos = [];
    for (const a of names) {
        combos.push([a]);
        for (const b of names) {
            if (a < b && vocab.adverbs[a] !== vocab.adverbs[b]) {
                combos.push([a, b]);
            }
        }
    }
    return combos;
}
/**
 * Every utterance string this composer can emit over the given vocabulary,
 * with `novelColours` standing in for arbitrary free-text colour words.
 * The service contract test feeds each one through the parser.
 */
export function reachableStrings(vocab, novelColours = ["ochre", "puce"]) {
    const colours = [...vocab.knownColours, ...novelColours.filter(validColourWord)];
    const strings = ["yes"];
    for (const adverbs of adverbCombos(vocab)) {
        strings.push(composeFeedback({ kind: "partial", adverbs }, vocab));
        for (const shape of [...vocab.shapes, null]) {
            for (const colour of [...colours, null]) {
                if (colour === null && shape === null) {
                    continue;
                }
                strings.push(composeFeedback({ kind: "full", colour, shape, adverbs }, vocab));
            }
        }
    }
    return strings;
}
