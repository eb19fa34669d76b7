import { describe, expect, it } from "vitest";
import { alternates, deriveView, entry } from "../src/state.js";
import type { SessionState } from "../src/types.js";

const state: SessionState = {
  session_id: "abc",
  utterance: {
    subject: "i",
    negated: false,
    verb: "own",
    object: "property",
    places: { in: "u.s.", from: null, to: null },
    tense: "future",
    condition: null,
    adverb: null,
    can: false,
    rendered: "I will own property in U.S.",
  },
  rendered: "I will own property in U.S.",
  refinements: [
    { operator: "HOW", slot: null },
    { operator: "WHICH_PART", slot: "in" },
    { operator: "WHICH_KIND", slot: null },
  ],
  done: false,
};

describe("deriveView", () => {
  it("is a pure function of the last response", () => {
    const view = deriveView(state, false);
    expect(view.buttons.map((b) => b.label)).toEqual([
      "How?",
      "Which part? (in)",
      "Which kind?",
    ]);
    expect(view.buttons.every((b) => b.enabled)).toBe(true);
    expect(view.done).toBe(false);
  });

  it("disables everything while a request is in flight", () => {
    const view = deriveView(state, true);
    expect(view.buttons.every((b) => !b.enabled)).toBe(true);
  });

  it("shows the done badge with no buttons when fully specific", () => {
    const view = deriveView({ ...state, refinements: [], done: true }, false);
    expect(view.buttons).toEqual([]);
    expect(view.done).toBe(true);
  });

  it("renders nothing without a session", () => {
    expect(deriveView(null, false)).toEqual({ buttons: [], done: false });
  });
});

describe("transcript alternation", () => {
  it("accepts engine-first alternation", () => {
    const log = [
      entry("engine", "a", () => 1),
      entry("user", "b", () => 2),
      entry("engine", "c", () => 3),
    ];
    expect(alternates(log)).toBe(true);
  });

  it("rejects user-first or doubled turns", () => {
    expect(alternates([entry("user", "x")])).toBe(false);
    expect(
      alternates([entry("engine", "a"), entry("engine", "b")]),
    ).toBe(false);
  });
});
