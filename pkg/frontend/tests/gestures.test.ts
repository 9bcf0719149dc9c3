import { describe, expect, it } from "vitest";
import { GestureRecognizer, type GestureHandlers } from "../src/gestures.js";

interface Log {
    events: string[];
}

function recorder(): { recognizer: GestureRecognizer; log: Log } {
    const log: Log = { events: [] };
    const handlers: GestureHandlers = {
        onTap: (x, y) => log.events.push(`tap ${x},${y}`),
        onDoubleTap: (x, y) => log.events.push(`double ${x},${y}`),
        onDragStart: (x, y) => log.events.push(`dragstart ${x},${y}`),
        onDragMove: (dx, dy) => log.events.push(`dragmove ${dx},${dy}`),
        onDragEnd: (x, y) => log.events.push(`dragend ${x},${y}`),
        onPinch: (_cx, _cy, factor) => log.events.push(`pinch ${factor.toFixed(2)}`),
        onPinchEnd: () => log.events.push("pinchend"),
    };
    return { recognizer: new GestureRecognizer(handlers), log };
}

describe("taps", () => {
    it("fires a tap on press and release without movement", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 50, 60);
        recognizer.pointerUp(1, 50, 60, 1000);
        expect(log.events).toEqual(["tap 50,60"]);
    });

    it("tolerates jitter below the slop threshold", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 50, 60);
        recognizer.pointerMove(1, 53, 62);
        recognizer.pointerUp(1, 53, 62, 1000);
        expect(log.events).toEqual(["tap 53,62"]);
    });

    it("recognises a quick second tap as a double tap", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 50, 60);
        recognizer.pointerUp(1, 50, 60, 1000);
        recognizer.pointerDown(2, 52, 61);
        recognizer.pointerUp(2, 52, 61, 1200);
        expect(log.events).toEqual(["tap 50,60", "double 52,61"]);
    });

    it("treats a slow second tap as two taps", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 50, 60);
        recognizer.pointerUp(1, 50, 60, 1000);
        recognizer.pointerDown(2, 50, 60);
        recognizer.pointerUp(2, 50, 60, 1600);
        expect(log.events).toEqual(["tap 50,60", "tap 50,60"]);
    });

    it("treats a distant second tap as two taps", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 50, 60);
        recognizer.pointerUp(1, 50, 60, 1000);
        recognizer.pointerDown(2, 300, 60);
        recognizer.pointerUp(2, 300, 60, 1100);
        expect(log.events).toEqual(["tap 50,60", "tap 300,60"]);
    });

    it("does not chain three quick taps into two doubles", () => {
        const { recognizer, log } = recorder();
        for (const [id, at] of [[1, 1000], [2, 1100], [3, 1200]] as const) {
            recognizer.pointerDown(id, 10, 10);
            recognizer.pointerUp(id, 10, 10, at);
        }
        expect(log.events).toEqual(["tap 10,10", "double 10,10", "tap 10,10"]);
    });
});

describe("drags", () => {
    it("promotes movement beyond the slop into a drag", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 10, 10);
        recognizer.pointerMove(1, 40, 10);
        recognizer.pointerMove(1, 70, 30);
        recognizer.pointerUp(1, 70, 30, 1000);
        expect(log.events).toEqual([
            "dragstart 10,10",
            "dragmove 30,0",
            "dragmove 60,20",
            "dragend 70,30",
        ]);
    });

    it("never reports a tap for a drag", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 10, 10);
        recognizer.pointerMove(1, 90, 90);
        recognizer.pointerUp(1, 90, 90, 1000);
        expect(log.events.filter((e) => e.startsWith("tap"))).toEqual([]);
    });
});

describe("pinches", () => {
    it("reports scale factors while two pointers move apart", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 100, 100);
        recognizer.pointerDown(2, 200, 100);
        recognizer.pointerMove(2, 300, 100);
        expect(log.events).toEqual(["pinch 2.00"]);
        recognizer.pointerUp(2, 300, 100, 1000);
        expect(log.events).toEqual(["pinch 2.00", "pinchend"]);
    });

    it("does not let the surviving finger produce a tap", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 100, 100);
        recognizer.pointerDown(2, 200, 100);
        recognizer.pointerUp(2, 200, 100, 1000);
        recognizer.pointerUp(1, 100, 100, 1050);
        expect(log.events).toEqual(["pinchend"]);
    });

    it("ends a drag cleanly when a second finger lands", () => {
        const { recognizer, log } = recorder();
        recognizer.pointerDown(1, 10, 10);
        recognizer.pointerMove(1, 60, 10);
        recognizer.pointerDown(2, 200, 10);
        expect(log.events).toEqual(["dragstart 10,10", "dragmove 50,0", "dragend 200,10"]);
    });
});
