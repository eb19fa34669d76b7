import type { AtomRecord, Operator, PlaceSlot, Refinement } from "./types.js";

/** Phrase the user's question about the engine's current statement.
 *
 * HOW        -> "How will you own property in u.s.?"
 * WHICH_PART -> "Which part of u.s. will you own property?"
 * WHICH_KIND -> "Which kind of property will you own in ca?"
 *
 * Terms come from the utterance record (canonical ids), so they read
 * lowercase; only the engine's replies carry display spelling.
 */

const AUX: Record<string, string> = {
  past: "did",
  present: "do",
  future: "will",
};

function words(id: string): string {
  return id.replace(/_/g, " ");
}

function placePhrases(atom: AtomRecord, skip?: PlaceSlot): string[] {
  const out: string[] = [];
  for (const slot of ["in", "from", "to"] as const) {
    const value = atom.places[slot];
    if (value && slot !== skip) out.push(`${slot} ${words(value)}`);
  }
  return out;
}

function capitalize(sentence: string): string {
  return sentence.charAt(0).toUpperCase() + sentence.slice(1);
}

export function questionFor(
  operator: Operator,
  slot: PlaceSlot | null,
  atom: AtomRecord,
): string {
  const aux = AUX[atom.tense] ?? "do";
  const verb = words(atom.verb);
  const object = atom.object ? words(atom.object) : "";
  const you = `${aux} you ${verb}`;

  if (operator === "HOW") {
    const tail = [object, ...placePhrases(atom)].filter(Boolean).join(" ");
    return capitalize(`how ${you}${tail ? " " + tail : ""}?`);
  }
  if (operator === "WHICH_PART") {
    const target = slot ?? firstOccupiedSlot(atom);
    const place = target ? atom.places[target] : null;
    const tail = [object, ...placePhrases(atom, target ?? undefined)]
      .filter(Boolean)
      .join(" ");
    return capitalize(
      `which part of ${place ? words(place) : "it"} ${you}${tail ? " " + tail : ""}?`,
    );
  }
  const tail = placePhrases(atom).join(" ");
  return capitalize(
    `which kind of ${object || "it"} ${aux} you ${verb}${tail ? " " + tail : ""}?`,
  );
}

function firstOccupiedSlot(atom: AtomRecord): PlaceSlot | null {
  for (const slot of ["in", "from", "to"] as const) {
    if (atom.places[slot]) return slot;
  }
  return null;
}

export function buttonLabel(refinement: Refinement): string {
  if (refinement.operator === "HOW") return "How?";
  if (refinement.operator === "WHICH_KIND") return "Which kind?";
  return refinement.slot
    ? `Which part? (${refinement.slot})`
    : "Which part?";
}
