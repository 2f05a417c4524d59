fn main() {
    let body = std::fs::read_to_string("/tmp/body.json").unwrap();
    let body = body.trim_end();
    let doc: spinor_forge_cli::VerifyDocument = serde_json::from_str(body).unwrap();
    let regen = spinor_forge_cli::to_json(&doc);
    if regen == body { println!("IDENTICAL"); return; }
    for (i, (a, b)) in body.bytes().zip(regen.bytes()).enumerate() {
        if a != b {
            println!("first diff at byte {i}");
            println!("orig:  ...{}...", &body[i.saturating_sub(60)..(i+60).min(body.len())]);
            println!("regen: ...{}...", &regen[i.saturating_sub(60)..(i+60).min(regen.len())]);
            return;
        }
    }
    println!("prefix equal; lengths {} vs {}", body.len(), regen.len());
}
