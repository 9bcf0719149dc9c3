export class HelpScreen {
    public readonly root: HTMLElement;

    public constructor(onBack: () => void) {
        this.root = document.createElement("div");
        this.root.className = "screen help-screen";

        const title = document.createElement("h1");
        title.textContent = "How to use gateboard";

        const list = document.createElement("ul");
        list.className = "help-list";
        for (const line of HELP_LINES) {
            const item = document.createElement("li");
            item.textContent = line;
            list.append(item);
        }

        const back = document.createElement("button");
        back.textContent = "Back";
        back.className = "menu-button help-back";
        back.addEventListener("click", onBack);

        this.root.append(title, list, back);
    }
}

const HELP_LINES = [
    "Tap a part in the palette to drop it at the centre of the view.",
    "Wires are drawn output first: tap an output pin, then tap the input pin it should drive.",
    "Tap a switch to toggle it. The circuit recomputes immediately, there is no run button.",
    "Tap Delete to arm delete mode, then tap elements to remove them. Tap Delete again to disarm.",
    "Drag an element to move it. Drag empty space to pan, pinch or scroll to zoom.",
    "Double tap empty space to bring the view back to its home position.",
    "Clean empties the board but keeps your view. New Circuit starts over completely.",
    "A hatched lamp means its input is undefined, usually an unwired pin or a feedback loop.",
];
