// @vitest-environment happy-dom
//
// End-to-end UI behaviour against the real service. The page URL is
// pointed at the spawned server so the app's same-origin requests land
// there, exactly as when the service hosts the built UI itself.

import { afterAll, beforeAll, beforeEach, describe, expect, it, vi } from "vitest";
import { App } from "../src/app.js";
import { pinPoint } from "../src/geometry.js";
import type { SimulationScreen } from "../src/simulation.js";
import { installCanvasStub } from "./helpers/canvasstub.js";
import { startService, type RunningService } from "./helpers/service.js";

let service: RunningService;

beforeAll(async () => {
    service = await startService();
    (window as unknown as { happyDOM: { setURL: (url: string) => void } }).happyDOM.setURL(
        `${service.base}/`,
    );
    installCanvasStub();
});

afterAll(async () => {
    await service.stop();
});

beforeEach(() => {
    document.body.innerHTML = "";
});

async function setup(): Promise<{ app: App; sim: SimulationScreen }> {
    const mount = document.createElement("div");
    document.body.append(mount);
    const app = new App(mount, { apiBase: "" });
    const sim = await app.showSimulation();
    return { app, sim };
}

let pointerId = 100;

// A deliberate tap: press and release in place. Timestamps are passed
// explicitly so tests control the double-tap window.
function tap(sim: SimulationScreen, x: number, y: number, at: number): void {
    const id = pointerId++;
    sim.gestures.pointerDown(id, x, y);
    sim.gestures.pointerUp(id, x, y, at);
}

function drag(sim: SimulationScreen, from: [number, number], to: [number, number]): void {
    const id = pointerId++;
    sim.gestures.pointerDown(id, from[0], from[1]);
    sim.gestures.pointerMove(id, (from[0] + to[0]) / 2, (from[1] + to[1]) / 2);
    sim.gestures.pointerMove(id, to[0], to[1]);
    sim.gestures.pointerUp(id, to[0], to[1], 500);
}

function button(root: ParentNode, selector: string): HTMLButtonElement {
    const el = root.querySelector(selector);
    if (el === null) {
        throw new Error(`missing element: ${selector}`);
    }
    return el as HTMLButtonElement;
}

function paletteButton(sim: SimulationScreen, name: string): HTMLButtonElement {
    const match = Array.from(
        sim.root.querySelectorAll<HTMLButtonElement>(".palette-button"),
    ).find((b) => b.textContent === name);
    if (match === undefined) {
        throw new Error(`no palette button named ${name}`);
    }
    return match;
}

function tick(): Promise<void> {
    return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("two-tap wiring", () => {
    it("draws the wire only after the server acknowledges it", async () => {
        const { sim } = await setup();

        paletteButton(sim, "switch").click();
        await sim.idle();
        paletteButton(sim, "led").click();
        await sim.idle();

        let state = sim.board.getState();
        expect(state.elements).toHaveLength(2);
        const switchId = state.elements[0]!.id;
        const ledId = state.elements[1]!.id;

        // Both parts landed at the view centre; drag the led (topmost)
        // out of the way.
        drag(sim, [150, 75], [310, 75]);
        await sim.idle();
        state = sim.board.getState();
        const led = state.elements.find((e) => e.id === ledId)!;
        expect(led.position.x).toBeCloseTo(310, 4);

        // First tap: the output pin latches.
        const switchEl = state.elements.find((e) => e.id === switchId)!;
        const out = pinPoint(switchEl, "out0")!;
        tap(sim, out.x, out.y, 1000);
        await sim.idle();
        expect(sim.board.getState().pending_pin).toBe(`${switchId}.out0`);

        // Second tap: the input pin. Nothing is drawn until the answer
        // comes back; the connection appears only in the acknowledged
        // snapshot.
        const inPin = pinPoint(led, "in0")!;
        tap(sim, inPin.x, inPin.y, 3000);
        expect(sim.board.getState().connections).toHaveLength(0);
        await sim.idle();

        state = sim.board.getState();
        expect(state.connections).toEqual([
            { from: { element: switchId, pin: "out0" }, to: { element: ledId, pin: "in0" } },
        ]);
        expect(state.pending_pin).toBeNull();
        expect(state.indicators[String(ledId)]).toBe("off");

        // The wired lamp follows the switch.
        tap(sim, 150, 75, 6000);
        await sim.idle();
        state = sim.board.getState();
        expect(state.levels[`${switchId}.out0`]).toBe("1");
        expect(state.indicators[String(ledId)]).toBe("on");
    });

    it("reports a rejected wiring tap in the status bar", async () => {
        const { sim } = await setup();
        paletteButton(sim, "lamp").click();
        await sim.idle();

        const lamp = sim.board.getState().elements[0]!;
        const inPin = pinPoint(lamp, "in0")!;
        tap(sim, inPin.x, inPin.y, 1000);
        await sim.idle();

        expect(sim.board.getState().connections).toHaveLength(0);
        expect(button(sim.root, ".tool-delete").textContent).toBe("Delete");
        expect(sim.root.querySelector(".status-bar")!.textContent).toContain("rejected");
    });
});

describe("delete mode", () => {
    it("flips the button label and deletes on tap until disarmed", async () => {
        const { sim } = await setup();
        paletteButton(sim, "xor").click();
        await sim.idle();
        expect(sim.board.getState().elements).toHaveLength(1);

        const deleteButton = button(sim.root, ".tool-delete");
        expect(deleteButton.textContent).toBe("Delete");

        deleteButton.click();
        await sim.idle();
        expect(deleteButton.textContent).toBe("DELETE ACTIVE");
        expect(sim.board.getState().mode).toBe("delete_active");

        // Tapping the gate removes it instead of selecting it.
        tap(sim, 150, 75, 1000);
        await sim.idle();
        expect(sim.board.getState().elements).toHaveLength(0);

        // The mode persists across deletions: the next element dies too.
        expect(deleteButton.textContent).toBe("DELETE ACTIVE");
        paletteButton(sim, "and").click();
        await sim.idle();
        tap(sim, 150, 75, 5000);
        await sim.idle();
        expect(sim.board.getState().elements).toHaveLength(0);

        deleteButton.click();
        await sim.idle();
        expect(deleteButton.textContent).toBe("Delete");
        expect(sim.board.getState().mode).toBe("normal");
    });

    it("deletes switches rather than toggling them", async () => {
        const { sim } = await setup();
        paletteButton(sim, "switch").click();
        await sim.idle();
        button(sim.root, ".tool-delete").click();
        await sim.idle();

        tap(sim, 150, 75, 1000);
        await sim.idle();
        expect(sim.board.getState().elements).toHaveLength(0);
    });
});

describe("viewport", () => {
    it("restores zoom 1 and pan (0,0) on a double tap over empty space", async () => {
        const { sim } = await setup();

        sim.wheel(150, 75, -480);
        await sim.idle();
        let view = sim.board.getViewport();
        expect(view.zoom).toBeGreaterThan(1.9);

        const remote = await sim.client.state();
        expect(remote.state.viewport.zoom).toBeCloseTo(view.zoom, 6);

        // Pan by dragging empty space.
        drag(sim, [20, 20], [80, 50]);
        await sim.idle();
        view = sim.board.getViewport();
        expect(view.pan.dx).not.toBe(0);

        // Double tap far from any element.
        tap(sim, 30, 30, 1000);
        tap(sim, 32, 31, 1150);
        await sim.idle();

        view = sim.board.getViewport();
        expect(view.zoom).toBe(1);
        expect(view.pan).toEqual({ dx: 0, dy: 0 });

        const after = await sim.client.state();
        expect(after.state.viewport).toEqual({ zoom: 1.0, pan: { dx: 0.0, dy: 0.0 } });
    });

    it("drops new elements at the centre of the current view", async () => {
        const { sim } = await setup();
        sim.wheel(150, 75, 480);
        await sim.idle();

        paletteButton(sim, "nand").click();
        await sim.idle();

        const el = sim.board.getState().elements[0]!;
        const centre = sim.board.centerWorld();
        expect(el.position.x).toBeCloseTo(centre.x, 4);
        expect(el.position.y).toBeCloseTo(centre.y, 4);
    });
});

describe("confirmations", () => {
    it("asks yes/no before going back to the main menu", async () => {
        const { sim } = await setup();

        button(sim.root, ".tool-menu").click();
        await tick();
        let overlay = document.querySelector(".dialog-overlay");
        expect(overlay).not.toBeNull();
        expect(overlay!.querySelector(".dialog-question")!.textContent).toContain("main menu");
        expect(overlay!.querySelector(".dialog-yes")!.textContent).toBe("Yes");
        expect(overlay!.querySelector(".dialog-no")!.textContent).toBe("No");

        // No keeps the board up.
        button(overlay as ParentNode, ".dialog-no").click();
        await tick();
        expect(document.querySelector(".dialog-overlay")).toBeNull();
        expect(document.querySelector(".simulation-screen")).not.toBeNull();

        // Yes leaves for the home screen.
        button(sim.root, ".tool-menu").click();
        await tick();
        overlay = document.querySelector(".dialog-overlay");
        button(overlay as ParentNode, ".dialog-yes").click();
        await tick();
        expect(document.querySelector(".simulation-screen")).toBeNull();
        expect(document.querySelector(".home-screen")).not.toBeNull();
    });

    it("asks yes/no before exiting from the board", async () => {
        const { sim } = await setup();
        const closeSpy = vi.spyOn(window, "close").mockImplementation(() => undefined);

        button(sim.root, ".tool-exit").click();
        await tick();
        const overlay = document.querySelector(".dialog-overlay");
        expect(overlay).not.toBeNull();
        expect(overlay!.querySelector(".dialog-question")!.textContent).toContain("Exit");

        button(overlay as ParentNode, ".dialog-yes").click();
        await tick();
        expect(document.querySelector(".goodbye-screen")).not.toBeNull();
        expect(closeSpy).toHaveBeenCalled();
        closeSpy.mockRestore();
    });

    it("asks yes/no before exiting from the home screen", async () => {
        const mount = document.createElement("div");
        document.body.append(mount);
        const app = new App(mount, { apiBase: "" });
        app.showHome();

        button(app.root, ".home-exit").click();
        await tick();
        expect(document.querySelector(".dialog-overlay")).not.toBeNull();

        button(document.querySelector(".dialog-overlay") as ParentNode, ".dialog-no").click();
        await tick();
        expect(document.querySelector(".dialog-overlay")).toBeNull();
        expect(document.querySelector(".home-screen")).not.toBeNull();
    });
});
