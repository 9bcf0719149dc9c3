// Modal Yes/No confirmation. Resolves true for Yes, false for No.
export function confirmDialog(root: HTMLElement, question: string): Promise<boolean> {
    return new Promise((resolve) => {
        const overlay = document.createElement("div");
        overlay.className = "dialog-overlay";

        const box = document.createElement("div");
        box.className = "dialog-box";

        const text = document.createElement("p");
        text.className = "dialog-question";
        text.textContent = question;

        const row = document.createElement("div");
        row.className = "dialog-buttons";

        const finish = (answer: boolean) => {
            overlay.remove();
            resolve(answer);
        };

        const yes = document.createElement("button");
        yes.textContent = "Yes";
        yes.className = "dialog-yes";
        yes.addEventListener("click", () => finish(true));

        const no = document.createElement("button");
        no.textContent = "No";
        no.className = "dialog-no";
        no.addEventListener("click", () => finish(false));

        row.append(yes, no);
        box.append(text, row);
        overlay.append(box);
        root.append(overlay);
        no.focus();
    });
}
